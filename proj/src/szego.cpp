#include "fracspec/szego.hpp"

#include <cmath>
#include <future>
#include <ostream>
#include <sstream>
#include <string>

#include "fracspec/errors.hpp"
#include "fracspec/format.hpp"
#include "fracspec/glweights.hpp"
#include "fracspec/spectra.hpp"
#include "fracspec/toeplitz.hpp"

namespace fracspec::szego {

using specfun::kPi;

namespace {

double alternating_sign(std::size_t k) { return k % 2 == 0 ? 1.0 : -1.0; }

void require_scale(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("scale must be positive");
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Quadrature: return "quadrature";
    case Method::Closed: return "closed";
    case Method::SpecialCase: return "special-case";
  }
  return "quadrature";
}

Method method_from_string(std::string_view name) {
  if (name == "quadrature") return Method::Quadrature;
  if (name == "closed") return Method::Closed;
  if (name == "special-case") return Method::SpecialCase;
  throw DomainError("unknown coefficient method '" + std::string(name) + "'");
}

double unit_spacing_scale(double alpha, double k_alpha) {
  glweights::require_alpha(alpha);
  return k_alpha / std::abs(std::cos(0.5 * kPi * alpha));
}

double logf_coeff_quadrature(double alpha, std::size_t k, double scale, bool shifted,
                             const specfun::QuadratureSpec& spec) {
  glweights::require_alpha(alpha);
  require_scale(scale);
  const double reduction = 1.0 - 0.5 * alpha;
  const double freq = static_cast<double>(k);
  specfun::QuadratureSpec local = spec;
  double integral = 0.0;
  if (shifted) {
    local.singular_right = true;
    integral = specfun::integrate(
        [=](double t) {
          const double logf = alpha * std::log(std::abs(2.0 * std::cos(0.5 * t))) +
                              std::log(std::cos(t * reduction));
          return logf * std::cos(freq * t);
        },
        0.0, kPi, local);
  } else {
    local.singular_left = true;
    integral = specfun::integrate(
        [=](double t) {
          const double logf = alpha * std::log(std::abs(2.0 * std::sin(0.5 * t))) +
                              std::log(std::cos((t - kPi) * reduction));
          return logf * std::cos(freq * t);
        },
        0.0, kPi, local);
  }
  return integral / kPi + (k == 0 ? std::log(scale) : 0.0);
}

double logf_coeff0_closed(double alpha, double scale) {
  glweights::require_alpha(alpha);
  require_scale(scale);
  if (alpha == 2.0) return std::log(scale);
  const double reduction = 1.0 - 0.5 * alpha;
  return std::log(scale) -
         2.0 / ((2.0 - alpha) * kPi) * specfun::lobachevsky(kPi * reduction);
}

double logf_coeff_closed(double alpha, std::size_t k) {
  glweights::require_alpha(alpha);
  if (alpha == 2.0) throw DomainError("logf_coeff_closed: alpha must be < 2 (use gaussian_coeff)");
  if (k < 1) throw DomainError("logf_coeff_closed: k must be >= 1");
  const double reduction = 1.0 - 0.5 * alpha;
  const double kk = static_cast<double>(k);
  const double ratio = kk / reduction;
  specfun::QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  const double integral = specfun::integrate(
      [=](double u) { return (std::cos((ratio - 1.0) * u) - std::cos((ratio + 1.0) * u)) / std::cos(u); },
      0.0, kPi * reduction, spec);
  return -alternating_sign(k) * alpha / (2.0 * kk) + integral / (2.0 * kk * kPi);
}

double gaussian_coeff(std::size_t k, bool shifted, double scale) {
  require_scale(scale);
  if (k == 0) return std::log(scale);
  const double unshifted = -1.0 / static_cast<double>(k);
  return shifted ? alternating_sign(k) * unshifted : unshifted;
}

double holtsmark_firstline(std::size_t k) {
  if (k < 1) throw DomainError("holtsmark_firstline: k must be >= 1");
  // sin(m pi/2) is 0 for even m and alternates +1, -1 over odd m.
  double finite_sum = 0.0;
  for (std::size_t m = 1; m <= 2 * k; m += 2) {
    finite_sum += (((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0) / static_cast<double>(m);
  }
  const double kk = static_cast<double>(k);
  return -alternating_sign(k) * 3.0 / (4.0 * kk) - (0.25 * kPi - finite_sum) / (kPi * kk);
}

double holtsmark_digamma_line(std::size_t k) {
  if (k < 1) throw DomainError("holtsmark_digamma_line: k must be >= 1");
  const double kk = static_cast<double>(k);
  const double psi_diff =
      specfun::digamma((2.0 * kk + 1.0) / 4.0) - specfun::digamma((2.0 * kk - 1.0) / 4.0);
  return alternating_sign(k) * (-3.0 / (4.0 * kk) + psi_diff / (4.0 * kk));
}

double holtsmark_coeff0(double scale) {
  require_scale(scale);
  return std::log(scale) - specfun::kLn2 + 2.0 * specfun::catalan() / kPi;
}

DigammaDiscrepancy holtsmark_digamma_discrepancy(std::size_t k) {
  DigammaDiscrepancy d;
  d.k = k;
  d.digamma_line = holtsmark_digamma_line(k);
  d.first_line = holtsmark_firstline(k);
  d.quadrature = logf_coeff_quadrature(1.5, k, 1.0, true);
  d.deviation = std::abs(d.digamma_line - d.quadrature);
  return d;
}

SzegoCoefficients compute_coefficients(double alpha, double scale, std::size_t kmax,
                                       Method method, bool shifted,
                                       const specfun::QuadratureSpec& spec) {
  glweights::require_alpha(alpha);
  require_scale(scale);
  SzegoCoefficients out;
  out.alpha = alpha;
  out.scale = scale;
  out.method = method;
  out.shifted = shifted;
  out.ck.reserve(kmax);

  const bool gaussian = alpha == 2.0;
  switch (method) {
    case Method::Quadrature:
      out.c0 = logf_coeff_quadrature(alpha, 0, scale, shifted, spec);
      for (std::size_t k = 1; k <= kmax; ++k) {
        out.ck.push_back(logf_coeff_quadrature(alpha, k, scale, shifted, spec));
      }
      break;
    case Method::Closed:
      out.c0 = logf_coeff0_closed(alpha, scale);
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (gaussian) {
          out.ck.push_back(gaussian_coeff(k, shifted));
        } else {
          const double c = logf_coeff_closed(alpha, k);
          out.ck.push_back(shifted ? c : alternating_sign(k) * c);
        }
      }
      break;
    case Method::SpecialCase:
      if (gaussian) {
        out.c0 = gaussian_coeff(0, shifted, scale);
        for (std::size_t k = 1; k <= kmax; ++k) out.ck.push_back(gaussian_coeff(k, shifted));
      } else if (alpha == 1.5) {
        out.c0 = holtsmark_coeff0(scale);
        for (std::size_t k = 1; k <= kmax; ++k) {
          const double c = holtsmark_firstline(k);
          out.ck.push_back(shifted ? c : alternating_sign(k) * c);
        }
      } else {
        throw DomainError("special-case coefficients exist only for alpha = 2 and alpha = 1.5");
      }
      break;
  }
  return out;
}

SzegoConstants szego_constants(const SzegoCoefficients& coeffs, std::size_t m) {
  if (m > coeffs.kmax()) {
    std::ostringstream msg;
    msg << "szego_constants: m = " << m << " exceeds kmax = " << coeffs.kmax();
    throw DomainError(msg.str());
  }
  SzegoConstants out;
  out.m = m;
  out.log_g = coeffs.c0;
  long double sum = 0.0L;
  for (std::size_t k = 1; k <= m; ++k) {
    const long double c = coeffs.ck[k - 1];
    sum += static_cast<long double>(k) * c * c;
  }
  out.log_e_partial = static_cast<double>(sum);
  return out;
}

std::vector<AsymptoteRow> asymptote_study(double alpha, std::span<const std::size_t> n_list) {
  glweights::require_alpha(alpha);
  if (n_list.empty()) throw DomainError("asymptote_study: empty n list");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1 || (i > 0 && n_list[i] <= n_list[i - 1])) {
      throw DomainError("asymptote_study: n list must be positive and strictly ascending");
    }
  }
  const double c0 = logf_coeff0_closed(alpha, 1.0);

  std::vector<std::future<AsymptoteRow>> jobs;
  jobs.reserve(n_list.size());
  for (const std::size_t n : n_list) {
    jobs.push_back(std::async(std::launch::async, [alpha, c0, n] {
      const auto op = toeplitz::assemble(toeplitz::StableParams::unit(alpha, 0.0, n));
      const auto ld = spectra::lu_logdet(op.dense());
      if (ld.sign != 1) throw ConvergenceError("asymptote_study: determinant not positive");
      AsymptoteRow row;
      row.n = n;
      row.log_det = ld.log_abs;
      row.n_c0 = static_cast<double>(n) * c0;
      row.residual = row.log_det - row.n_c0;
      if (alpha == 2.0) {
        long double harmonic = 0.0L;
        for (std::size_t k = n; k >= 1; --k) harmonic += 1.0L / static_cast<long double>(k);
        row.diag = static_cast<double>(std::exp(harmonic) / static_cast<long double>(n + 1));
      } else {
        row.diag = row.residual / static_cast<double>(n);
      }
      return row;
    }));
  }
  std::vector<AsymptoteRow> rows;
  rows.reserve(jobs.size());
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

void write_asymptote_csv(std::ostream& out, std::span<const AsymptoteRow> rows) {
  out << "n,log_det,n_c0,residual,diag\n";
  for (const auto& r : rows) {
    out << r.n << ',' << format_double(r.log_det) << ',' << format_double(r.n_c0) << ','
        << format_double(r.residual) << ',' << format_double(r.diag) << '\n';
  }
}

}  // namespace fracspec::szego
