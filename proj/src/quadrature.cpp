#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "orthoiir/numerics.hpp"

namespace orthoiir {
namespace {

// Returns (P_n(x), P'_n(x)).
std::pair<double, double> LegendreWithDerivative(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  const double dp = n * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule GaussLegendre(int order) {
  if (order < 1 || order > kMaxQuadratureOrder) {
    throw std::invalid_argument("gauss-legendre order must be in [1, " +
                                std::to_string(kMaxQuadratureOrder) + "], got " +
                                std::to_string(order));
  }
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);

  constexpr int kMaxIterations = 100;
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      const auto [p, dp] = LegendreWithDerivative(order, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw std::runtime_error("gauss-legendre: Newton iteration failed to converge for order " +
                               std::to_string(order));
    }
    if (order % 2 == 1 && i == half - 1) x = 0.0;
    const double dp = LegendreWithDerivative(order, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[order - 1 - i] = w;
    rule.weights[i] = w;
  }
  return rule;
}

std::shared_ptr<const QuadratureRule> CachedGaussLegendre(int order) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const QuadratureRule>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(GaussLegendre(order));
  std::lock_guard<std::mutex> lock(mutex);
  return cache.try_emplace(order, std::move(rule)).first->second;
}

}  // namespace orthoiir
