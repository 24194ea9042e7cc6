#pragma once

#include <complex>
#include <vector>

#include "orthoiir/iir.hpp"

namespace orthoiir {

/// Frequency response of a PoleZeroModel sampled on [0, pi].
struct ResponseCurve {
  std::vector<double> omegas;
  std::vector<std::complex<double>> values;
  /// -infinity where |H| < 1e-300.
  std::vector<double> magnitude_db;
  std::vector<double> phase_unwrapped;
  /// -d(phase)/d(omega) in samples.
  std::vector<double> group_delay;

  std::size_t size() const { return omegas.size(); }
};

inline constexpr int kDefaultGridPoints = 2048;

/// gain * prod(e^{jw} - z_i) / prod(e^{jw} - p_j), with factor magnitudes
/// accumulated in the log domain. Throws PoleEvaluationError (grid index 0) if
/// a pole lies within 1e-12 of e^{jw}.
std::complex<double> EvalModel(const PoleZeroModel& model, double omega);

/// gain * prod r_i / prod d_j computed directly from the distances.
double DistanceProductMagnitude(const PoleZeroModel& model, double omega);

/// Uniform grid of n points over [0, pi], both endpoints included.
std::vector<double> UniformGrid(int n_points);

/// Evaluates the model on UniformGrid(n_points) with OpenMP, then unwraps the
/// phase and takes central differences (one-sided at the ends) for the group
/// delay. Output is identical to SweepSerial.
ResponseCurve Sweep(const PoleZeroModel& model, int n_points = kDefaultGridPoints);

/// Single-threaded reference for Sweep.
ResponseCurve SweepSerial(const PoleZeroModel& model, int n_points = kDefaultGridPoints);

/// Adds/subtracts 2 pi so that adjacent samples differ by at most pi.
std::vector<double> UnwrapPhase(const std::vector<double>& wrapped);

/// -d(phase)/d(omega) by central differences, one-sided at the endpoints.
std::vector<double> GroupDelay(const std::vector<double>& omegas, const std::vector<double>& phase);

/// Exact group delay from the per-factor derivative of arg(e^{jw} - c).
double AnalyticGroupDelay(const PoleZeroModel& model, double omega);

}  // namespace orthoiir
