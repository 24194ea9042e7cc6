#include "orthoiir/fir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "orthoiir/numerics.hpp"

namespace orthoiir {
namespace {

// Greedy one-to-one matching of each point against partner(point).
template <typename Partner>
bool PairsUp(const std::vector<Complex>& pts, double tolerance, Partner partner) {
  std::vector<bool> used(pts.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    const Complex target = partner(pts[i]);
    std::size_t best = pts.size();
    double best_dist = tolerance * std::max(1.0, std::abs(target));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (used[j] || j == i) continue;
      const double d = std::abs(pts[j] - target);
      if (d <= best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best == pts.size()) {
      // Self-paired points (real for conjugation, unit-circle for reciprocation).
      if (std::abs(pts[i] - target) <= tolerance * std::max(1.0, std::abs(target))) {
        used[i] = true;
        continue;
      }
      return false;
    }
    used[i] = used[best] = true;
  }
  return true;
}

// Cosine-series coefficients of g(c) = f_a(sqrt((1 + c) / 2)) by a DCT on
// degree + 1 Chebyshev nodes; exact for the degree-(num_terms - 1) polynomial.
std::vector<double> CosineCoeffs(const LegendreSeries& series) {
  const int n = static_cast<int>(series.coeffs.size());
  std::vector<double> g(n);
  for (int j = 0; j < n; ++j) {
    const double c = std::cos(std::numbers::pi * (j + 0.5) / n);
    const double t = std::sqrt(std::clamp(0.5 * (1.0 + c), 0.0, 1.0));
    g[j] = EvalSeries(series, t * series.domain_max);
  }
  std::vector<double> out(n, 0.0);
  for (int k = 0; k < n; ++k) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += g[j] * std::cos(std::numbers::pi * k * (j + 0.5) / n);
    out[k] = (k == 0 ? 1.0 : 2.0) * sum / n;
  }
  return out;
}

}  // namespace

std::vector<std::pair<Complex, int>> ZeroSet::Distinct(double tolerance) const {
  std::vector<std::pair<Complex, int>> out;
  for (const Complex& z : points) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) {
      return std::abs(e.first - z) <= tolerance * std::max(1.0, std::abs(z));
    });
    if (it == out.end()) {
      out.emplace_back(z, 1);
    } else {
      ++it->second;
    }
  }
  return out;
}

bool IsConjugateClosed(const ZeroSet& set, double tolerance) {
  return PairsUp(set.points, tolerance, [](Complex z) { return std::conj(z); });
}

bool IsReciprocalClosed(const ZeroSet& set, double tolerance) {
  std::vector<Complex> finite;
  for (const Complex& z : set.points) {
    if (z != Complex(0.0, 0.0)) finite.push_back(z);
  }
  if (finite.size() != set.points.size()) return false;
  return PairsUp(finite, tolerance, [](Complex z) { return 1.0 / z; });
}

std::vector<double> LegendreToPowerCoeffs(const std::vector<double>& even_legendre_coeffs) {
  const int num_terms = static_cast<int>(even_legendre_coeffs.size());
  if (num_terms == 0) return {};
  const int max_order = 2 * (num_terms - 1);
  // Monomial coefficients of P_k in t, extended precision.
  std::vector<long double> prev(max_order + 1, 0.0L);
  std::vector<long double> cur(max_order + 1, 0.0L);
  std::vector<long double> acc(max_order + 1, 0.0L);
  prev[0] = 1.0L;  // P_0
  acc[0] += static_cast<long double>(even_legendre_coeffs[0]);
  if (max_order >= 1) cur[1] = 1.0L;  // P_1
  for (int k = 1; k < max_order; ++k) {
    std::vector<long double> next(max_order + 1, 0.0L);
    for (int i = 0; i <= max_order; ++i) {
      long double v = -static_cast<long double>(k) * prev[i];
      if (i > 0) v += static_cast<long double>(2 * k + 1) * cur[i - 1];
      next[i] = v / static_cast<long double>(k + 1);
    }
    prev = std::move(cur);
    cur = std::move(next);
    if ((k + 1) % 2 == 0) {
      const long double c = even_legendre_coeffs[(k + 1) / 2];
      for (int i = 0; i <= max_order; ++i) acc[i] += c * cur[i];
    }
  }
  std::vector<double> out(num_terms);
  for (int k = 0; k < num_terms; ++k) out[k] = static_cast<double>(acc[2 * k]);
  return out;
}

FirPrototype FirFromSeries(const LegendreSeries& series, const FilterSpec& spec) {
  if (series.coeffs.empty()) throw std::invalid_argument("fir: empty series");
  for (double c : series.coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("fir: non-finite series coefficient");
  }
  FirPrototype p;
  p.series = series;
  p.spec = spec;
  p.power_coeffs = LegendreToPowerCoeffs(series.coeffs);
  p.cosine_coeffs = CosineCoeffs(series);
  return p;
}

FirPrototype SynthesizeFir(const ObjectFunction& obj, int num_terms) {
  if (num_terms < 1) throw std::invalid_argument("fir: num_terms must be >= 1");
  const int quad_order = DefaultQuadOrder(num_terms);
  LegendreSeries series = Project(obj.function, num_terms, quad_order);
  series.domain_max = obj.source.x0;
  FirPrototype p = FirFromSeries(series, obj.source);
  LegendreSeries unit = series;
  unit.domain_max = 1.0;
  p.integrated_squared_error = IntegratedSquaredError(obj.function, unit, quad_order);
  return p;
}

double EvalFirResponse(const FirPrototype& p, double omega) {
  if (!(omega >= 0.0 && omega <= std::numbers::pi)) {
    throw std::domain_error("fir response: omega = " + std::to_string(omega) +
                            " outside [0, pi]");
  }
  const double t = omega == std::numbers::pi ? 0.0 : std::cos(0.5 * omega);
  return EvalSeries(p.series, t * p.series.domain_max);
}

double EvalPowerForm(const FirPrototype& p, double t) {
  const double u = t * t;
  double sum = 0.0;
  for (auto it = p.power_coeffs.rbegin(); it != p.power_coeffs.rend(); ++it) sum = sum * u + *it;
  return sum;
}

std::vector<Complex> FindCosineRoots(const FirPrototype& p) {
  if (TrimmedLength(p.cosine_coeffs) == 0) {
    throw std::invalid_argument("fir roots: characteristic is identically zero");
  }
  const std::size_t len = TrimmedLength(p.cosine_coeffs);
  if (std::abs(p.cosine_coeffs[len - 1]) < 1e-300) {
    throw std::invalid_argument("fir roots: leading coefficient underflows");
  }
  return ChebyshevRoots(p.cosine_coeffs);
}

std::vector<Complex> FindXRoots(const FirPrototype& p) {
  std::vector<Complex> out;
  for (const Complex& c : FindCosineRoots(p)) {
    const Complex x = std::sqrt(0.5 * (1.0 + c));
    out.push_back(x);
    out.push_back(-x);
  }
  return out;
}

ZeroSet XRootsToZZeros(const std::vector<Complex>& x_roots) {
  ZeroSet out;
  out.points.reserve(2 * x_roots.size());
  for (const Complex& x : x_roots) {
    const Complex c = 2.0 * x * x - 1.0;
    if (c.imag() == 0.0 && std::abs(c.real()) <= 1.0) {
      // Unit-circle pair exp(+-j omega) with cos(omega) = c.
      const double s = std::sqrt(1.0 - c.real() * c.real());
      out.points.emplace_back(c.real(), s);
      out.points.emplace_back(c.real(), -s);
      continue;
    }
    const Complex s = std::sqrt(c * c - 1.0);
    // Take the larger-modulus root directly and the other as its reciprocal,
    // since z1 * z2 = 1.
    const Complex z1 = std::abs(c + s) >= std::abs(c - s) ? c + s : c - s;
    out.points.push_back(z1);
    out.points.push_back(1.0 / z1);
  }
  return out;
}

FirFactorization FactorFir(const FirPrototype& p) {
  const std::size_t len = TrimmedLength(p.cosine_coeffs);
  if (len == 0) throw std::invalid_argument("fir roots: characteristic is identically zero");
  FirFactorization f;
  f.delay = static_cast<int>(len) - 1;
  if (f.delay == 0) {
    f.gain = p.cosine_coeffs[0];
    return f;
  }
  f.gain = 0.5 * p.cosine_coeffs[len - 1];
  std::vector<Complex> principal;
  for (const Complex& c : FindCosineRoots(p)) principal.push_back(std::sqrt(0.5 * (1.0 + c)));
  f.zeros = XRootsToZZeros(principal);
  return f;
}

std::vector<Complex> ExpandRoots(const std::vector<Complex>& roots, Complex gain) {
  std::vector<Complex> poly{gain};
  for (const Complex& r : roots) {
    poly.push_back(0.0);
    for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i] -= r * poly[i - 1];
  }
  return poly;
}

}  // namespace orthoiir
