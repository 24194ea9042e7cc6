#include "orthoiir/response.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "orthoiir/error.hpp"

namespace orthoiir {
namespace {

constexpr double kPoleCoincidence = 1e-12;
constexpr double kDbFloor = 1e-300;

std::complex<double> UnitPoint(double omega) { return std::polar(1.0, omega); }

ResponseCurve FinishCurve(std::vector<double> omegas, std::vector<std::complex<double>> values) {
  ResponseCurve curve;
  curve.omegas = std::move(omegas);
  curve.values = std::move(values);
  const std::size_t n = curve.omegas.size();
  curve.magnitude_db.resize(n);
  std::vector<double> wrapped(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::abs(curve.values[i]);
    curve.magnitude_db[i] =
        mag < kDbFloor ? -std::numeric_limits<double>::infinity() : 20.0 * std::log10(mag);
    wrapped[i] = std::arg(curve.values[i]);
  }
  curve.phase_unwrapped = UnwrapPhase(wrapped);
  curve.group_delay = GroupDelay(curve.omegas, curve.phase_unwrapped);
  return curve;
}

void CheckPoints(int n_points) {
  if (n_points < 16) throw std::invalid_argument("sweep: n_points must be >= 16");
}

}  // namespace

std::complex<double> EvalModel(const PoleZeroModel& model, double omega) {
  const std::complex<double> e = UnitPoint(omega);
  double log_mag = std::log(std::abs(model.gain));
  double phase = model.gain < 0 ? std::numbers::pi : 0.0;
  for (const auto& p : model.poles.points) {
    const auto d = e - p;
    const double r = std::abs(d);
    if (r <= kPoleCoincidence) {
      throw PoleEvaluationError("evaluation at pole (" + std::to_string(p.real()) + ", " +
                                    std::to_string(p.imag()) + ") for omega = " +
                                    std::to_string(omega),
                                0);
    }
    log_mag -= std::log(r);
    phase -= std::arg(d);
  }
  for (const auto& z : model.zeros.points) {
    const auto d = e - z;
    const double r = std::abs(d);
    if (r == 0.0) return {0.0, 0.0};
    log_mag += std::log(r);
    phase += std::arg(d);
  }
  return std::polar(std::exp(log_mag), phase);
}

double DistanceProductMagnitude(const PoleZeroModel& model, double omega) {
  const std::complex<double> e = UnitPoint(omega);
  double num = std::abs(model.gain);
  for (const auto& z : model.zeros.points) num *= std::abs(e - z);
  double den = 1.0;
  for (const auto& p : model.poles.points) den *= std::abs(e - p);
  return num / den;
}

std::vector<double> UniformGrid(int n_points) {
  CheckPoints(n_points);
  std::vector<double> grid(n_points);
  const double step = std::numbers::pi / (n_points - 1);
  for (int i = 0; i < n_points; ++i) grid[i] = i * step;
  grid.back() = std::numbers::pi;
  return grid;
}

ResponseCurve Sweep(const PoleZeroModel& model, int n_points) {
  std::vector<double> omegas = UniformGrid(n_points);
  std::vector<std::complex<double>> values(n_points);
  // Exceptions cannot leave an OpenMP region; record the first failing index.
  long failed = -1;
  std::string message;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_points; ++i) {
    try {
      values[i] = EvalModel(model, omegas[i]);
    } catch (const PoleEvaluationError& e) {
#pragma omp critical(orthoiir_sweep_error)
      if (failed < 0 || i < failed) {
        failed = i;
        message = e.what();
      }
    }
  }
  if (failed >= 0) {
    throw PoleEvaluationError(message + " at grid index " + std::to_string(failed),
                              static_cast<std::size_t>(failed));
  }
  return FinishCurve(std::move(omegas), std::move(values));
}

ResponseCurve SweepSerial(const PoleZeroModel& model, int n_points) {
  std::vector<double> omegas = UniformGrid(n_points);
  std::vector<std::complex<double>> values(n_points);
  for (int i = 0; i < n_points; ++i) {
    try {
      values[i] = EvalModel(model, omegas[i]);
    } catch (const PoleEvaluationError& e) {
      throw PoleEvaluationError(std::string(e.what()) + " at grid index " + std::to_string(i),
                                static_cast<std::size_t>(i));
    }
  }
  return FinishCurve(std::move(omegas), std::move(values));
}

std::vector<double> UnwrapPhase(const std::vector<double>& wrapped) {
  std::vector<double> out(wrapped.size());
  if (wrapped.empty()) return out;
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  out[0] = wrapped[0];
  double offset = 0.0;
  for (std::size_t i = 1; i < wrapped.size(); ++i) {
    const double jump = wrapped[i] - wrapped[i - 1];
    offset -= kTwoPi * std::round(jump / kTwoPi);
    out[i] = wrapped[i] + offset;
  }
  return out;
}

std::vector<double> GroupDelay(const std::vector<double>& omegas, const std::vector<double>& phase) {
  const std::size_t n = omegas.size();
  if (phase.size() != n) throw std::invalid_argument("group delay: size mismatch");
  std::vector<double> tau(n, 0.0);
  if (n < 2) return tau;
  tau[0] = -(phase[1] - phase[0]) / (omegas[1] - omegas[0]);
  tau[n - 1] = -(phase[n - 1] - phase[n - 2]) / (omegas[n - 1] - omegas[n - 2]);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    tau[i] = -(phase[i + 1] - phase[i - 1]) / (omegas[i + 1] - omegas[i - 1]);
  }
  return tau;
}

double AnalyticGroupDelay(const PoleZeroModel& model, double omega) {
  // d/dw arg(e^{jw} - c) = Re(e^{jw} / (e^{jw} - c)).
  const std::complex<double> e = UnitPoint(omega);
  double tau = 0.0;
  for (const auto& z : model.zeros.points) tau -= std::real(e / (e - z));
  for (const auto& p : model.poles.points) tau += std::real(e / (e - p));
  return tau;
}

}  // namespace orthoiir
