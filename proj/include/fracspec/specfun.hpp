#pragma once

#include <functional>

namespace fracspec::specfun {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kLn2 = 0.693147180559945309417232121458176568;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kCatalan = 0.915965594177219015054603514932384110;

/// Natural log of Gamma(x) for x > 0. Argument shift to x >= 16 followed by
/// the Stirling series, carried out in extended precision.
double log_gamma(double x);
long double log_gamma_ext(long double x);

/// Psi(x) = d/dx log Gamma(x) for x > 0.
double digamma(double x);

/// L(x) = -\int_0^x log(cos u) du on [0, pi/2). With this sign L >= 0.
double lobachevsky(double x);

/// Catalan's constant (stored value).
double catalan();

/// Plain partial sum sum_{m=0}^{terms} (-1)^m / (2m+1)^2.
double catalan_partial_sum(long terms);

/// Catalan's constant from its alternating series, accelerated with the
/// Cohen-Rodriguez Villegas-Zagier weights.
double catalan_series(int terms = 40);

/// Euler's constant from lim (H_m - log m), Richardson-extrapolated over
/// m = base * 2^j, j = 0..levels-1.
double euler_gamma_limit(int base = 16, int levels = 8);

/// Re-derives the stored constants from their defining series and limits.
/// Throws std::logic_error when any stored value disagrees by more than 1e-12.
void validate_constants();

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 60;
  bool singular_left = false;
  bool singular_right = false;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// Intervals are bisected in order of largest error estimate until the summed
/// estimate drops below max(abs_tol, rel_tol * |result|). Flagged endpoints
/// get a geometric initial partition (widths halving towards the endpoint),
/// which resolves integrable logarithmic singularities. f is never evaluated
/// at a or b.
///
/// Throws DomainError for a >= b or an invalid spec, ConvergenceError when an
/// interval would need to be split beyond max_depth.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec = {});

}  // namespace fracspec::specfun
