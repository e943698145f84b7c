#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "fracspec/specfun.hpp"

namespace fracspec::szego {

// Fourier coefficients (log f)_k of the symbol of the symmetric (beta = 0)
// operator. "Shifted" refers to the |2cos(theta/2)| form, whose coefficients
// are (-1)^k times the unshifted ones; c0 is the same for both.

enum class Method { Quadrature, Closed, SpecialCase };
std::string_view to_string(Method m);
Method method_from_string(std::string_view name);

struct SzegoCoefficients {
  double alpha = 2.0;
  double scale = 1.0;  ///< physical prefactor; enters c0 only, as log(scale)
  double c0 = 0.0;
  std::vector<double> ck;  ///< k = 1..kmax
  Method method = Method::Quadrature;
  bool shifted = true;

  [[nodiscard]] std::size_t kmax() const { return ck.size(); }
  /// (log f)_k for 0 <= k <= kmax.
  [[nodiscard]] double coeff(std::size_t k) const { return k == 0 ? c0 : ck.at(k - 1); }
};

/// K_alpha / |cos(pi alpha / 2)|, the prefactor with unit grid spacing.
double unit_spacing_scale(double alpha, double k_alpha = 1.0);

/// (1/pi) int_0^pi log f(theta) cos(k theta) dtheta (+ log(scale) at k = 0),
/// with the log singularity resolved by graded refinement at the symbol zero.
double logf_coeff_quadrature(double alpha, std::size_t k, double scale = 1.0,
                             bool shifted = true,
                             const specfun::QuadratureSpec& spec = {});

/// log(scale) - 2/((2-alpha) pi) L(pi (1 - alpha/2)); the alpha = 2 limit is log(scale).
double logf_coeff0_closed(double alpha, double scale = 1.0);

/// Shifted coefficient for k >= 1: (-1)^{k+1} alpha/(2k) plus the remaining
/// cosine-ratio integral over [0, pi(1 - alpha/2)]. alpha in (1, 2).
double logf_coeff_closed(double alpha, std::size_t k);

/// alpha = 2: log K_2 at k = 0, -1/k (unshifted) for k >= 1.
double gaussian_coeff(std::size_t k, bool shifted = false, double scale = 1.0);

/// alpha = 3/2, k >= 1, shifted: (-1)^{k+1} 3/(4k) - (pi/4 - sum_{m=1}^{2k} sin(m pi/2)/m)/(pi k).
double holtsmark_firstline(std::size_t k);

/// alpha = 3/2, k >= 1: the digamma expression
/// (-1)^k (-3/(4k) + (Psi((2k+1)/4) - Psi((2k-1)/4))/(4k)). It does not agree
/// with the quadrature coefficients; see holtsmark_digamma_discrepancy().
double holtsmark_digamma_line(std::size_t k);

/// alpha = 3/2: log(scale) - log 2 + 2G/pi.
double holtsmark_coeff0(double scale);

struct DigammaDiscrepancy {
  std::size_t k = 0;
  double digamma_line = 0.0;
  double first_line = 0.0;
  double quadrature = 0.0;
  double deviation = 0.0;  ///< |digamma_line - quadrature|
};
DigammaDiscrepancy holtsmark_digamma_discrepancy(std::size_t k);

/// Coefficients 0..kmax by the requested method. SpecialCase covers alpha = 2
/// and alpha = 3/2 only; Closed requires alpha < 2 (alpha = 2 falls back to
/// the Gaussian values).
SzegoCoefficients compute_coefficients(double alpha, double scale, std::size_t kmax,
                                       Method method, bool shifted = true,
                                       const specfun::QuadratureSpec& spec = {});

struct SzegoConstants {
  double log_g = 0.0;
  double log_e_partial = 0.0;
  std::size_t m = 0;
};

/// log G = c0, log E_m = sum_{k=1}^m k c_k^2 (beta = 0 so c_{-k} = c_k).
SzegoConstants szego_constants(const SzegoCoefficients& coeffs, std::size_t m);

struct AsymptoteRow {
  std::size_t n = 0;
  double log_det = 0.0;
  double n_c0 = 0.0;
  double residual = 0.0;  ///< log det M_n - n c0
  double diag = 0.0;      ///< exp(H_n)/(n+1) for alpha = 2, residual/n otherwise
};

/// log det of the dimensionless M_n (beta = 0) against n c0 for each n.
/// Entries are computed concurrently and returned in input order.
std::vector<AsymptoteRow> asymptote_study(double alpha, std::span<const std::size_t> n_list);

/// CSV with header n,log_det,n_c0,residual,diag.
void write_asymptote_csv(std::ostream& out, std::span<const AsymptoteRow> rows);

}  // namespace fracspec::szego
