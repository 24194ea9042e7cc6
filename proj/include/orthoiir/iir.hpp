#pragma once

#include <string>
#include <vector>

#include "orthoiir/filter_spec.hpp"
#include "orthoiir/fir.hpp"

namespace orthoiir {

enum class FilterKind { kLowPass, kHighPass };

const char* FilterKindName(FilterKind kind);

/// H(z) = gain * prod(z - zeros) / prod(z - poles).
struct PoleZeroModel {
  ZeroSet zeros;
  ZeroSet poles;
  double gain = 1.0;
  bool stabilized = false;
  int shifted_pole_count = 0;
};

/// Throws std::invalid_argument if gain is not finite and nonzero, a point is
/// non-finite, or a model flagged stabilized has a pole with |z| >= 1 + 1e-12.
void ValidateModel(const PoleZeroModel& model);

/// Expanded transfer function, descending powers of z, a[0] == 1.
struct TransferCoefficients {
  std::vector<double> b;
  std::vector<double> a;
};

TransferCoefficients ToTransferCoefficients(const PoleZeroModel& model);

/// Everything produced by one run of the design pipeline.
struct DesignReport {
  FilterSpec spec_lp;
  FilterSpec spec_hp;
  FilterKind kind = FilterKind::kLowPass;
  FirPrototype numerator;    // low-pass prototype (f_Na)
  FirPrototype denominator;  // high-pass prototype (f_Da)
  PoleZeroModel model_raw;
  PoleZeroModel model_stable;
  double reference_omega = 0.0;
  /// Minimum over [0, 1] of the prototype acting as denominator.
  double denominator_min = 0.0;
  std::vector<std::string> notes;
};

/// Minimum of f_a over a uniform grid of `points` samples on [0, 1].
double MinOverUnitInterval(const FirPrototype& p, int points = 4096);

/// Ratio of the two prototypes as a pole-zero model (unstabilized).
/// low_pass: num / den; high_pass: den / num. Throws if the prototype in the
/// denominator has a real root in [0, 1].
PoleZeroModel AssembleIir(const FirPrototype& num, const FirPrototype& den, FilterKind kind);

/// Moves every pole with |z| > 1 + 1e-10 to the origin and rescales the gain so
/// |H(reference_omega)| is unchanged. Poles within 1e-10 of the unit circle are
/// an error.
PoleZeroModel Stabilize(const PoleZeroModel& model, double reference_omega = 0.0);

/// Full pipeline; errors are rethrown as PipelineError tagged with the stage.
DesignReport Design(const FilterSpec& lp_spec, const FilterSpec& hp_spec, int num_terms_n,
                    int num_terms_m, FilterKind kind, double reference_omega = 0.0);

}  // namespace orthoiir
