#pragma once

#include <functional>
#include <span>
#include <vector>

namespace orthoiir {

/// f_a(x) = sum_n coeffs[n] * P_{2n}(x / domain_max), the truncated even
/// Legendre expansion of an object function.
struct LegendreSeries {
  std::vector<double> coeffs;
  double domain_max = 1.0;

  /// Truncation order (N or M): len(coeffs) - 1.
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// A real function on [0, 1] together with the points where it is not smooth.
/// Integrals are split at the breakpoints so every quadrature panel sees a
/// smooth integrand.
struct PiecewiseFunction {
  std::function<double(double)> eval;
  std::vector<double> breakpoints;  // interior points of (0, 1), ascending
};

/// P_order(x) by the Bonnet recurrence; |x| may exceed 1 by at most 1e-12.
double EvalLegendre(int order, double x);

/// Even-order Legendre projection of f on [0, 1]:
/// coeffs[n] = int_0^1 f P_2n dx / int_0^1 P_2n^2 dx, with both integrals taken
/// by the same Gauss-Legendre rule (quad_order nodes per panel).
/// Requires quad_order >= 4 * num_terms.
LegendreSeries Project(const PiecewiseFunction& f, int num_terms, int quad_order);

/// Same computation with the per-coefficient loop run serially; kept as the
/// reference for the OpenMP kernel.
LegendreSeries ProjectSerial(const PiecewiseFunction& f, int num_terms, int quad_order);

/// Default rule size used by the pipeline for a given number of terms.
int DefaultQuadOrder(int num_terms);

/// Evaluates the series at x in [0, domain_max].
double EvalSeries(const LegendreSeries& s, double x);

/// int_0^1 (f(x) - f_a(x))^2 dx using the same panel split as Project.
double IntegratedSquaredError(const PiecewiseFunction& f, const LegendreSeries& s, int quad_order);

}  // namespace orthoiir
