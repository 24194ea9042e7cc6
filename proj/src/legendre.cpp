#include "orthoiir/legendre.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "orthoiir/numerics.hpp"

namespace orthoiir {
namespace {

constexpr double kDomainSlack = 1e-12;

std::vector<double> PanelEdges(const PiecewiseFunction& f) {
  std::vector<double> edges{0.0};
  for (double b : f.breakpoints) {
    if (b > edges.back() && b < 1.0) edges.push_back(b);
  }
  edges.push_back(1.0);
  return edges;
}

// Quadrature nodes/weights on [0, 1] with f evaluated once per node.
struct Samples {
  std::vector<double> x;
  std::vector<double> w;
  std::vector<double> fx;
};

Samples SampleFunction(const PiecewiseFunction& f, int quad_order) {
  if (!f.eval) throw std::invalid_argument("projection: function is empty");
  const auto rule = CachedGaussLegendre(quad_order);
  const auto edges = PanelEdges(f);
  Samples s;
  const std::size_t total = (edges.size() - 1) * rule->nodes.size();
  s.x.reserve(total);
  s.w.reserve(total);
  s.fx.reserve(total);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p];
    const double b = edges[p + 1];
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
      const double x = mid + half * rule->nodes[i];
      const double v = f.eval(x);
      if (!std::isfinite(v)) {
        throw std::domain_error("projection: object function is non-finite at x = " +
                                std::to_string(x));
      }
      s.x.push_back(x);
      s.w.push_back(half * rule->weights[i]);
      s.fx.push_back(v);
    }
  }
  return s;
}

void CheckProjectArgs(int num_terms, int quad_order) {
  if (num_terms < 1) throw std::invalid_argument("projection: num_terms must be >= 1");
  if (quad_order < 4 * num_terms) {
    throw std::invalid_argument("projection: quad_order " + std::to_string(quad_order) +
                                " is below 4 * num_terms = " + std::to_string(4 * num_terms));
  }
  if (quad_order > kMaxQuadratureOrder) {
    throw std::invalid_argument("projection: quad_order exceeds " +
                                std::to_string(kMaxQuadratureOrder));
  }
}

double ProjectOne(const Samples& s, int n) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    const double p = EvalLegendre(2 * n, s.x[i]);
    num += s.w[i] * s.fx[i] * p;
    den += s.w[i] * p * p;
  }
  return num / den;
}

}  // namespace

double EvalLegendre(int order, double x) {
  if (order < 0) throw std::invalid_argument("legendre: negative order");
  if (!(std::abs(x) <= 1.0 + kDomainSlack)) {
    throw std::domain_error("legendre: x = " + std::to_string(x) + " outside [-1, 1]");
  }
  if (order == 0) return 1.0;
  double p0 = 1.0;
  double p1 = x;
  for (int k = 1; k < order; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

int DefaultQuadOrder(int num_terms) { return std::min(kMaxQuadratureOrder, 4 * num_terms + 32); }

LegendreSeries Project(const PiecewiseFunction& f, int num_terms, int quad_order) {
  CheckProjectArgs(num_terms, quad_order);
  const Samples s = SampleFunction(f, quad_order);
  LegendreSeries out;
  out.coeffs.assign(num_terms, 0.0);
#pragma omp parallel for schedule(static)
  for (int n = 0; n < num_terms; ++n) out.coeffs[n] = ProjectOne(s, n);
  return out;
}

LegendreSeries ProjectSerial(const PiecewiseFunction& f, int num_terms, int quad_order) {
  CheckProjectArgs(num_terms, quad_order);
  const Samples s = SampleFunction(f, quad_order);
  LegendreSeries out;
  out.coeffs.assign(num_terms, 0.0);
  for (int n = 0; n < num_terms; ++n) out.coeffs[n] = ProjectOne(s, n);
  return out;
}

double EvalSeries(const LegendreSeries& s, double x) {
  if (s.coeffs.empty()) throw std::invalid_argument("series: no coefficients");
  if (!(s.domain_max > 0.0)) throw std::invalid_argument("series: domain_max must be positive");
  if (!(x >= -kDomainSlack && x <= s.domain_max * (1.0 + kDomainSlack))) {
    throw std::domain_error("series: x = " + std::to_string(x) + " outside [0, domain_max]");
  }
  const double t = std::clamp(x / s.domain_max, 0.0, 1.0);
  // Walk the Legendre recurrence once, picking up even orders.
  double p0 = 1.0;
  double p1 = t;
  double sum = s.coeffs[0];
  const int max_order = 2 * s.order();
  for (int k = 1; k < max_order; ++k) {
    const double p2 = ((2.0 * k + 1.0) * t * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
    if ((k + 1) % 2 == 0) sum += s.coeffs[(k + 1) / 2] * p2;
  }
  return sum;
}

double IntegratedSquaredError(const PiecewiseFunction& f, const LegendreSeries& s, int quad_order) {
  if (quad_order < 4 * static_cast<int>(s.coeffs.size())) {
    throw std::invalid_argument("integrated_squared_error: quad_order below 4 * len(coeffs)");
  }
  const Samples samples = SampleFunction(f, quad_order);
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.x.size(); ++i) {
    const double e = samples.fx[i] - EvalSeries(s, samples.x[i]);
    sum += samples.w[i] * e * e;
  }
  return sum;
}

}  // namespace orthoiir
