#include "fracspec/toeplitz.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

#include "fracspec/errors.hpp"
#include "fracspec/format.hpp"
#include "fracspec/glweights.hpp"
#include "fracspec/specfun.hpp"

namespace fracspec::toeplitz {

using specfun::kPi;

StableParams::StableParams(double alpha, double beta, double k_alpha, double length,
                           std::size_t n)
    : alpha_(alpha), beta_(beta), k_alpha_(k_alpha), length_(length), n_(n) {
  glweights::require_alpha(alpha);
  if (!(beta >= -1.0 && beta <= 1.0)) throw DomainError("beta must lie in [-1, 1]");
  if (!(k_alpha > 0.0) || !std::isfinite(k_alpha)) throw DomainError("K_alpha must be > 0");
  if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("L must be > 0");
  if (n < 1) throw DomainError("n must be >= 1");
}

StableParams StableParams::unit(double alpha, double beta, std::size_t n) {
  return {alpha, beta, 1.0, static_cast<double>(n + 1), n};
}

double StableParams::scale() const {
  return k_alpha_ / (std::abs(std::cos(0.5 * kPi * alpha_)) * std::pow(epsilon(), alpha_));
}

ToeplitzOperator::ToeplitzOperator(StableParams params, std::vector<double> kernel)
    : params_(params), kernel_(std::move(kernel)) {
  if (kernel_.size() != 2 * params_.n() - 1) {
    throw DomainError("Toeplitz kernel must hold 2n-1 entries");
  }
}

double ToeplitzOperator::m(long k) const {
  const long half = static_cast<long>(n()) - 1;
  if (k < -half || k > half) throw DomainError("kernel index outside the band");
  return kernel_[static_cast<std::size_t>(k + half)];
}

DenseMatrix ToeplitzOperator::dense() const {
  const std::size_t size = n();
  DenseMatrix out(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) out(i, j) = kernel_[i + size - 1 - j];
  }
  return out;
}

DenseMatrix ToeplitzOperator::physical_dense() const {
  DenseMatrix out = dense();
  const double c = scale();
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (double& v : out.row(i)) v *= c;
  }
  return out;
}

std::vector<double> kernel_band(double alpha, double beta, std::size_t N) {
  const auto w = glweights::weights(alpha, N + 2);
  std::vector<double> band(2 * N + 1, 0.0);
  const auto at = [&](long k) -> double& { return band[static_cast<std::size_t>(k + static_cast<long>(N))]; };
  at(0) = -w[1];
  if (N >= 1) {
    // Superdiagonal (j = i + 1) carries the right-handed role; the lower
    // triangle mirrors beta -> -beta.
    at(-1) = -0.5 * ((1.0 + beta) * w[0] + (1.0 - beta) * w[2]);
    at(1) = -0.5 * ((1.0 - beta) * w[0] + (1.0 + beta) * w[2]);
  }
  for (std::size_t k = 2; k <= N; ++k) {
    const long kk = static_cast<long>(k);
    at(-kk) = -0.5 * (1.0 - beta) * w[k + 1];
    at(kk) = -0.5 * (1.0 + beta) * w[k + 1];
  }
  return band;
}

ToeplitzOperator assemble(const StableParams& params) {
  return {params, kernel_band(params.alpha(), params.beta(), params.n() - 1)};
}

ToeplitzOperator tridiagonal_laplacian(std::size_t n, double k2, double length) {
  if (n < 1) throw DomainError("tridiagonal_laplacian: n must be >= 1");
  const double l = length > 0.0 ? length : static_cast<double>(n + 1);
  std::vector<double> band(2 * n - 1, 0.0);
  band[n - 1] = 2.0;
  if (n > 1) {
    band[n - 2] = -1.0;
    band[n] = -1.0;
  }
  return {StableParams(2.0, 0.0, k2, l, n), std::move(band)};
}

double kernel_partial_sum(double alpha, double beta, std::size_t N) {
  const auto band = kernel_band(alpha, beta, N);
  long double sum = 0.0L;
  for (const double m : band) sum += m;
  return static_cast<double>(sum);
}

SymbolSample symbol_closed(const StableParams& params, double theta, bool shifted) {
  const double alpha = params.alpha();
  const double reduction = 1.0 - 0.5 * alpha;
  const double base = shifted ? std::abs(2.0 * std::cos(0.5 * theta))
                              : std::abs(2.0 * std::sin(0.5 * theta));
  const double magnitude = std::pow(base, alpha);
  const double phase = shifted ? theta * reduction : (theta - kPi) * reduction;
  SymbolSample s;
  s.theta = theta;
  s.shifted = shifted;
  s.u = magnitude * std::cos(phase);
  s.v = params.beta() == 0.0 ? 0.0 : -params.beta() * magnitude * std::sin(phase);
  return s;
}

SymbolSample symbol_series(const StableParams& params, double theta, std::size_t terms,
                           bool shifted) {
  if (terms < 1) throw DomainError("symbol_series: terms must be >= 1");
  const double alpha = params.alpha();
  const double t = shifted ? theta + kPi : theta;
  const auto w = glweights::weights(alpha, terms + 1);
  long double cos_sum = 0.0L;
  long double sin_sum = 0.0L;
  for (std::size_t k = 1; k <= terms; ++k) {
    const double kt = static_cast<double>(k) * t;
    cos_sum += w[k + 1] * std::cos(kt);
    sin_sum += w[k + 1] * std::sin(kt);
  }
  SymbolSample s;
  s.theta = theta;
  s.shifted = shifted;
  s.u = static_cast<double>(alpha - std::cos(t) - cos_sum);
  s.v = params.beta() == 0.0
            ? 0.0
            : static_cast<double>(params.beta() * (std::sin(t) - sin_sum));
  return s;
}

std::vector<SymbolSample> symbol_curve(const StableParams& params, std::size_t points,
                                       bool shifted) {
  if (points < 2) throw DomainError("symbol_curve: points must be >= 2");
  std::vector<SymbolSample> out;
  out.reserve(points);
  const double start = shifted ? -kPi : 0.0;
  for (std::size_t j = 0; j < points; ++j) {
    const double theta =
        start + 2.0 * kPi * static_cast<double>(j + 1) / static_cast<double>(points + 1);
    out.push_back(symbol_closed(params, theta, shifted));
  }
  return out;
}

double ellipse_residual(double alpha, double beta, const SymbolSample& sample) {
  const double base = sample.shifted ? std::abs(2.0 * std::cos(0.5 * sample.theta))
                                     : std::abs(2.0 * std::sin(0.5 * sample.theta));
  const double rhs = std::pow(base, 2.0 * alpha);
  double lhs = sample.u * sample.u;
  if (beta != 0.0) {
    const double scaled = sample.v / beta;
    lhs += scaled * scaled;
  }
  return std::abs(lhs - rhs);
}

double symbol_profile(double alpha, double theta) {
  return std::pow(std::abs(2.0 * std::sin(0.5 * theta)), alpha) *
         std::cos((theta - kPi) * (1.0 - 0.5 * alpha));
}

SymbolPeriod symbol_period(long p, long q) {
  if (p <= 0 || q <= 0) throw DomainError("symbol_period: p and q must be positive");
  if (std::gcd(p, q) != 1) throw DomainError("symbol_period: p/q must be in lowest terms");
  if (!(p > q && p <= 2 * q)) throw DomainError("symbol_period: p/q must lie in (1, 2]");
  // n1 (1 - p/(2q)) = n1 (2q - p) / (2q) must be an integer.
  const long n1 = (2 * q) / std::gcd(2 * q - p, 2 * q);
  return {n1, 2.0 * kPi * static_cast<double>(n1)};
}

double period_scan_residual(double alpha, double period, std::size_t grid) {
  double worst = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double theta = period * static_cast<double>(i) / static_cast<double>(grid);
    worst = std::max(worst,
                     std::abs(symbol_profile(alpha, theta + period) - symbol_profile(alpha, theta)));
  }
  return worst;
}

WienerBesov wiener_besov_check(const StableParams& params, std::size_t N) {
  if (N < 1) throw DomainError("wiener_besov_check: N must be >= 1");
  const double alpha = params.alpha();
  const double cos_abs = std::abs(std::cos(0.5 * kPi * alpha));
  const double factor = params.k_alpha() / cos_abs;
  const auto band = kernel_band(alpha, params.beta(), N);
  long double wiener = 0.0L;
  long double besov = 0.0L;
  for (std::size_t i = 0; i < band.size(); ++i) {
    const long k = static_cast<long>(i) - static_cast<long>(N);
    const long double m = band[i];
    wiener += std::abs(m);
    besov += static_cast<long double>(std::labs(k) + 1) * m * m;
  }
  WienerBesov out;
  out.wiener_partial = static_cast<double>(factor * wiener);
  out.besov_partial = static_cast<double>(factor * factor * besov);
  out.wiener_bound = 3.0 * params.k_alpha() * alpha / cos_abs;
  out.besov_bound = 4.0 * params.k_alpha() * params.k_alpha() / (cos_abs * cos_abs) *
                    (alpha * (0.75 * alpha - 1.0) + 1.0 + 16.0 / (9.0 * kPi));
  return out;
}

void write_symbol_csv(std::ostream& out, std::span<const SymbolSample> samples) {
  out << "theta,u,v\n";
  for (const auto& s : samples) {
    out << format_double(s.theta) << ',' << format_double(s.u) << ',' << format_double(s.v)
        << '\n';
  }
}

}  // namespace fracspec::toeplitz
