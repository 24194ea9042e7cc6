#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

namespace orthoiir {

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;
  int order = 0;
};

inline constexpr int kMaxQuadratureOrder = 512;

/// Nodes are the roots of P_order found by Newton iteration from Chebyshev-angle
/// guesses; weights are 2 / ((1 - x^2) P'_order(x)^2).
QuadratureRule GaussLegendre(int order);

/// Memoized GaussLegendre; safe to call from multiple threads.
std::shared_ptr<const QuadratureRule> CachedGaussLegendre(int order);

/// Integrates f over [a, b] with `rule` mapped affinely onto the interval.
template <typename F>
double Integrate(const QuadratureRule& rule, double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

/// Eigenvalues of a real square matrix stored row-major (n x n). The matrix is
/// balanced, reduced to upper Hessenberg form and then iterated with
/// Francis double-shift QR. Complex eigenvalues come out in exact conjugate pairs.
std::vector<std::complex<double>> Eigenvalues(std::vector<double> matrix, int n);

/// Roots of sum_k coeffs[k] x^k (ascending powers). Leading coefficients below
/// 1e-12 * max|coeffs| are trimmed first; throws std::invalid_argument on a zero
/// polynomial and std::domain_error if the trimmed degree is zero.
std::vector<std::complex<double>> PolyRoots(std::span<const double> coeffs);

/// Roots of sum_k coeffs[k] T_k(c) (Chebyshev first kind) from the colleague
/// matrix, same trimming rule as PolyRoots. A degree-zero series has no roots.
std::vector<std::complex<double>> ChebyshevRoots(std::span<const double> coeffs);

/// Number of coefficients left after trimming negligible leading entries.
std::size_t TrimmedLength(std::span<const double> coeffs, double relative_threshold = 1e-12);

}  // namespace orthoiir
