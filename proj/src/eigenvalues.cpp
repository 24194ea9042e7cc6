#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "orthoiir/numerics.hpp"

namespace orthoiir {
namespace {

class RowMajor {
 public:
  RowMajor(std::vector<double>& data, int n) : data_(data), n_(n) {}
  // 1-based accessors keep the QR sweep close to its textbook form.
  double& operator()(int i, int j) { return data_[(i - 1) * n_ + (j - 1)]; }
  int n() const { return n_; }

 private:
  std::vector<double>& data_;
  int n_;
};

// Iterative diagonal similarity with powers of two, equalizing the 2-norms of
// each off-diagonal row/column pair.
void Balance(RowMajor a) {
  const int n = a.n();
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool changed = false;
    for (int i = 1; i <= n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        c += a(j, i) * a(j, i);
        r += a(i, j) * a(i, j);
      }
      if (c == 0.0 || r == 0.0) continue;
      const double f = std::exp2(std::round(0.25 * std::log2(r / c)));
      if (c * f * f + r / (f * f) < 0.95 * (c + r)) {
        changed = true;
        for (int j = 1; j <= n; ++j) a(i, j) /= f;
        for (int j = 1; j <= n; ++j) a(j, i) *= f;
      }
    }
    if (!changed) return;
  }
}

bool IsUpperHessenberg(RowMajor a) {
  for (int i = 3; i <= a.n(); ++i)
    for (int j = 1; j <= i - 2; ++j)
      if (a(i, j) != 0.0) return false;
  return true;
}

// Householder similarity reduction to upper Hessenberg form.
void ReduceToHessenberg(RowMajor a) {
  const int n = a.n();
  std::vector<double> v(n + 1);
  for (int k = 1; k <= n - 2; ++k) {
    double norm = 0.0;
    for (int i = k + 1; i <= n; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = a(k + 1, k) > 0 ? -norm : norm;
    for (int i = k + 1; i <= n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (int i = k + 1; i <= n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;
    const double beta = 2.0 / vnorm2;
    // A <- H A
    for (int j = 1; j <= n; ++j) {
      double s = 0.0;
      for (int i = k + 1; i <= n; ++i) s += v[i] * a(i, j);
      s *= beta;
      for (int i = k + 1; i <= n; ++i) a(i, j) -= s * v[i];
    }
    // A <- A H
    for (int i = 1; i <= n; ++i) {
      double s = 0.0;
      for (int j = k + 1; j <= n; ++j) s += a(i, j) * v[j];
      s *= beta;
      for (int j = k + 1; j <= n; ++j) a(i, j) -= s * v[j];
    }
    for (int i = k + 2; i <= n; ++i) a(i, k) = 0.0;
  }
}

// Francis double-shift QR on an upper Hessenberg matrix, eigenvalues only.
std::vector<std::complex<double>> HessenbergQr(RowMajor a) {
  const int n = a.n();
  std::vector<double> wr(n + 1, 0.0);
  std::vector<double> wi(n + 1, 0.0);
  constexpr int kMaxIterations = 60;

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(a(i, j));

  int nn = n;
  double t = 0.0;
  double p = 0.0, q = 0.0, r = 0.0, s = 0.0, w = 0.0, x = 0.0, y = 0.0, z = 0.0;
  while (nn >= 1) {
    int its = 0;
    int l = 0;
    do {
      for (l = nn; l >= 2; --l) {
        s = std::abs(a(l - 1, l - 1)) + std::abs(a(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0.0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        wr[nn] = x + t;
        wi[nn] = 0.0;
        --nn;
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5 * (y - x);
          q = p * p + w;
          z = std::sqrt(std::abs(q));
          x += t;
          if (q >= 0.0) {
            z = p + std::copysign(z, p);
            wr[nn - 1] = wr[nn] = x + z;
            if (z != 0.0) wr[nn] = x - w / z;
            wi[nn - 1] = wi[nn] = 0.0;
          } else {
            wr[nn - 1] = wr[nn] = x + p;
            wi[nn] = z;
            wi[nn - 1] = -z;
          }
          nn -= 2;
        } else {
          if (its == kMaxIterations) {
            throw std::runtime_error("eigenvalues: QR iteration did not converge");
          }
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift.
            t += x;
            for (int i = 1; i <= nn; ++i) a(i, i) -= x;
            s = std::abs(a(nn, nn - 1)) + std::abs(a(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
          }
          ++its;
          int m = nn - 2;
          for (; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::abs(p) + std::abs(q) + std::abs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const double u = std::abs(a(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v =
                std::abs(p) * (std::abs(a(m - 1, m - 1)) + std::abs(z) + std::abs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0.0;
            if (i != m + 2) a(i, i - 3) = 0.0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0.0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              x = std::abs(p) + std::abs(q) + std::abs(r);
              if (x != 0.0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s != 0.0) {
              if (k == m) {
                if (l != m) a(k, k - 1) = -a(k, k - 1);
              } else {
                a(k, k - 1) = -s * x;
              }
              p += s;
              x = p / s;
              y = q / s;
              z = r / s;
              q /= p;
              r /= p;
              for (int j = k; j <= nn; ++j) {
                p = a(k, j) + q * a(k + 1, j);
                if (k != nn - 1) {
                  p += r * a(k + 2, j);
                  a(k + 2, j) -= p * z;
                }
                a(k + 1, j) -= p * y;
                a(k, j) -= p * x;
              }
              const int mmin = std::min(nn, k + 3);
              for (int i = l; i <= mmin; ++i) {
                p = x * a(i, k) + y * a(i, k + 1);
                if (k != nn - 1) {
                  p += z * a(i, k + 2);
                  a(i, k + 2) -= p * r;
                }
                a(i, k + 1) -= p * q;
                a(i, k) -= p;
              }
            }
          }
        }
      }
    } while (nn >= 1 && l < nn - 1);
  }

  std::vector<std::complex<double>> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.emplace_back(wr[i], wi[i]);
  return out;
}

}  // namespace

std::vector<std::complex<double>> Eigenvalues(std::vector<double> matrix, int n) {
  if (n < 0 || matrix.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("eigenvalues: matrix size does not match n*n");
  }
  if (n == 0) return {};
  for (double v : matrix) {
    if (!std::isfinite(v)) throw std::invalid_argument("eigenvalues: non-finite matrix entry");
  }
  RowMajor a(matrix, n);
  Balance(a);
  if (!IsUpperHessenberg(a)) ReduceToHessenberg(a);
  return HessenbergQr(a);
}

std::size_t TrimmedLength(std::span<const double> coeffs, double relative_threshold) {
  double max_abs = 0.0;
  for (double c : coeffs) max_abs = std::max(max_abs, std::abs(c));
  if (max_abs == 0.0) return 0;
  std::size_t len = coeffs.size();
  while (len > 0 && std::abs(coeffs[len - 1]) <= relative_threshold * max_abs) --len;
  return len;
}

std::vector<std::complex<double>> PolyRoots(std::span<const double> coeffs) {
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("poly_roots: non-finite coefficient");
  }
  const std::size_t len = TrimmedLength(coeffs);
  if (len == 0) throw std::invalid_argument("poly_roots: zero polynomial");
  const int degree = static_cast<int>(len) - 1;
  if (degree == 0) throw std::domain_error("poly_roots: polynomial has degree zero after trimming");

  // Companion matrix in upper Hessenberg form.
  std::vector<double> m(static_cast<std::size_t>(degree) * degree, 0.0);
  const double lead = coeffs[degree];
  for (int j = 0; j < degree; ++j) m[j] = -coeffs[degree - 1 - j] / lead;
  for (int i = 1; i < degree; ++i) m[i * degree + (i - 1)] = 1.0;
  return Eigenvalues(std::move(m), degree);
}

std::vector<std::complex<double>> ChebyshevRoots(std::span<const double> coeffs) {
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw std::invalid_argument("chebyshev_roots: non-finite coefficient");
  }
  const std::size_t len = TrimmedLength(coeffs);
  if (len == 0) throw std::invalid_argument("chebyshev_roots: zero polynomial");
  const int degree = static_cast<int>(len) - 1;
  if (degree == 0) return {};
  const double lead = coeffs[degree];
  if (degree == 1) return {std::complex<double>(-coeffs[0] / lead, 0.0)};

  // Colleague matrix C with c * [T_0..T_{d-1}] = C [T_0..T_{d-1}] at a root;
  // C is lower Hessenberg, so its transpose is stored directly.
  const int n = degree;
  std::vector<double> ct(static_cast<std::size_t>(n) * n, 0.0);
  auto set = [&](int row, int col, double v) { ct[col * n + row] += v; };
  set(0, 1, 1.0);
  for (int k = 1; k < n - 1; ++k) {
    set(k, k - 1, 0.5);
    set(k, k + 1, 0.5);
  }
  set(n - 1, n - 2, 0.5);
  for (int k = 0; k < n; ++k) set(n - 1, k, -0.5 * coeffs[k] / lead);
  return Eigenvalues(std::move(ct), n);
}

}  // namespace orthoiir
