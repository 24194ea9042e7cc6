#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "orthoiir/filter_spec.hpp"
#include "orthoiir/legendre.hpp"

namespace orthoiir {

using Complex = std::complex<double>;

/// Multiset of z-plane points (zeros or poles); repeated entries carry multiplicity.
struct ZeroSet {
  std::vector<Complex> points;

  std::size_t size() const { return points.size(); }

  /// Points grouped within `tolerance`, with their multiplicities.
  std::vector<std::pair<Complex, int>> Distinct(double tolerance = 1e-8) const;
};

/// True if every point can be paired one-to-one with the conjugate of another.
bool IsConjugateClosed(const ZeroSet& set, double tolerance = 1e-8);

/// True if every point off the unit circle pairs with its reciprocal 1/z.
bool IsReciprocalClosed(const ZeroSet& set, double tolerance = 1e-8);

/// Truncated zero-phase FIR characteristic f_a(cos(omega / 2)).
struct FirPrototype {
  LegendreSeries series;
  FilterSpec spec;
  /// f_a(t) = sum_k power_coeffs[k] * t^(2k), obtained by exact Legendre to
  /// monomial basis change accumulated in extended precision.
  std::vector<double> power_coeffs;
  /// f_a = sum_k cosine_coeffs[k] * cos(k omega): the Chebyshev coefficients in
  /// c = cos(omega), i.e. the symmetric impulse response h[0], h[+-k] = c_k / 2.
  std::vector<double> cosine_coeffs;
  /// int_0^1 (f - f_a)^2 dt against the source object function.
  double integrated_squared_error = 0.0;

  int num_terms() const { return static_cast<int>(series.coeffs.size()); }
};

/// FIR response as gain * exp(-j delay omega) * prod(exp(j omega) - z_i).
struct FirFactorization {
  ZeroSet zeros;
  double gain = 1.0;
  int delay = 0;
};

/// Steps 1-3: project the object function onto num_terms even Legendre
/// polynomials and derive the monomial and cosine representations.
FirPrototype SynthesizeFir(const ObjectFunction& obj, int num_terms);

/// FirPrototype for an explicit series, e.g. one produced elsewhere.
FirPrototype FirFromSeries(const LegendreSeries& series, const FilterSpec& spec = {});

/// Zero-phase amplitude f_a(cos(omega / 2)) for omega in [0, pi].
double EvalFirResponse(const FirPrototype& p, double omega);

/// f_a via power_coeffs; for consistency checks.
double EvalPowerForm(const FirPrototype& p, double t);

/// Coefficients of sum_n c_n P_2n(t) in powers of u = t^2 (ascending).
std::vector<double> LegendreToPowerCoeffs(const std::vector<double>& even_legendre_coeffs);

/// Roots in c = cos(omega) = 2 t^2 - 1, from the Chebyshev colleague matrix.
std::vector<Complex> FindCosineRoots(const FirPrototype& p);

/// All roots of f_a in t, ordered as (r_1, -r_1, r_2, -r_2, ...); count equals
/// the polynomial degree in t.
std::vector<Complex> FindXRoots(const FirPrototype& p);

/// Maps each root x_r to the two solutions of z^2 - 2cz + 1 = 0 with
/// c = 2 x_r^2 - 1. Even polynomials should pass one root per +-pair.
ZeroSet XRootsToZZeros(const std::vector<Complex>& x_roots);

/// Full z-plane factorization of the FIR characteristic, gain included.
FirFactorization FactorFir(const FirPrototype& p);

/// Expands gain * prod(z - z_i) into descending-power coefficients.
std::vector<Complex> ExpandRoots(const std::vector<Complex>& roots, Complex gain = 1.0);

}  // namespace orthoiir
