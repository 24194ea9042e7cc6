#pragma once

#include <vector>

#include "orthoiir/legendre.hpp"

namespace orthoiir {

/// One constant-level band [omega_start, omega_end) in rad/sample.
struct Band {
  double omega_start = 0.0;
  double omega_end = 0.0;
  double level = 0.0;

  bool operator==(const Band&) const = default;
};

/// Piecewise-constant ideal magnitude over [0, pi]. Gaps between consecutive
/// bands are transition bands, interpolated linearly in omega.
struct FilterSpec {
  std::vector<Band> bands;
  double x0 = 1.0;

  bool operator==(const FilterSpec&) const = default;
};

/// Object function of a FilterSpec: f(t) with t = x / x0 = cos(omega / 2) in [0, 1].
struct ObjectFunction {
  PiecewiseFunction function;
  FilterSpec source;

  double operator()(double t) const { return function.eval(t); }
};

/// Throws std::invalid_argument describing the first violated invariant.
void ValidateFilterSpec(const FilterSpec& spec);

/// x = x0 cos(omega / 2); omega must lie in [0, pi].
double OmegaToX(double omega, double x0 = 1.0);

/// omega = 2 acos(x / x0); x must lie in [0, x0].
double XToOmega(double x, double x0 = 1.0);

/// Ideal magnitude at omega, including the linear ramp inside transition gaps.
double IdealLevel(const FilterSpec& spec, double omega);

ObjectFunction BuildObjectFunction(const FilterSpec& spec);

/// High-pass spec sharing the band edges of a two-band low-pass spec: lo_level
/// where lp passes, hi_level where lp stops. lo_level must be positive, since
/// the result is used as a denominator that may not vanish on [0, pi].
FilterSpec HpLpComplement(const FilterSpec& lp, double lo_level, double hi_level);

/// Two-band low-pass spec from the band-edge shorthand.
FilterSpec LowPassSpec(double passband_edge, double stopband_edge, double passband_level,
                       double stopband_level, double x0 = 1.0);

}  // namespace orthoiir
