#include "fracspec/glweights.hpp"

#include <cmath>
#include <sstream>

#include "fracspec/errors.hpp"
#include "fracspec/specfun.hpp"

namespace fracspec::glweights {

void require_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    std::ostringstream msg;
    msg << "alpha must lie in (1, 2], got " << alpha;
    throw DomainError(msg.str());
  }
}

WeightSequence weights(double alpha, std::size_t count) {
  require_alpha(alpha);
  WeightSequence seq{alpha, {}};
  seq.values.reserve(count + 1);
  seq.values.push_back(1.0);
  for (std::size_t n = 1; n <= count; ++n) {
    const double factor = 1.0 - (alpha + 1.0) / static_cast<double>(n);
    seq.values.push_back(factor * seq.values.back());
  }
  return seq;
}

double weight_binomial(double alpha, std::size_t n) {
  require_alpha(alpha);
  if (n == 0) return 1.0;
  if (n == 1) return -alpha;
  if (alpha == std::floor(alpha)) {
    // Integer exponent: the binomial product hits the zero factor (alpha - alpha).
    double c = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      c *= (alpha - static_cast<double>(j)) / static_cast<double>(j + 1);
    }
    return (n % 2 == 0) ? c : -c;
  }
  // w_n = alpha (alpha-1) Gamma(n-alpha) / (Gamma(2-alpha) Gamma(n+1)), n >= 2.
  const long double a = alpha;
  const long double nn = static_cast<long double>(n);
  const long double prefactor = a * (a - 1.0L);
  const int sign = prefactor < 0.0L ? -1 : 1;  // both Gamma arguments are positive here
  const long double log_mag = std::log(std::abs(prefactor)) + specfun::log_gamma_ext(nn - a) -
                              specfun::log_gamma_ext(2.0L - a) -
                              specfun::log_gamma_ext(nn + 1.0L);
  return static_cast<double>(sign * std::exp(log_mag));
}

double weight_partial_sum(double alpha, std::size_t N) {
  const WeightSequence seq = weights(alpha, N);
  double sum = 0.0;
  double comp = 0.0;
  for (const double w : seq.values) {
    const double y = w - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double dalembert_ratio(double alpha, std::size_t n) {
  require_alpha(alpha);
  if (n < 2) throw DomainError("dalembert_ratio: n must be >= 2");
  const double x = static_cast<double>(n);
  return (x + 1.0) / x * (x + 1.0 - alpha) / ((x + 2.0) * (x + 2.0));
}

double besov_term_ratio(double alpha, std::size_t n) {
  require_alpha(alpha);
  if (n < 2) throw DomainError("besov_term_ratio: n must be >= 2");
  const double x = static_cast<double>(n);
  const double r = (x + 1.0 - alpha) / (x + 2.0);
  return (x + 1.0) / x * r * r;
}

SeriesResult gamma_ratio_square_sum(double alpha, double tail_tol) {
  require_alpha(alpha);
  if (!(tail_tol > 0.0)) throw DomainError("gamma_ratio_square_sum: tail_tol must be > 0");
  // r_n = Gamma(n+1-alpha)/Gamma(n+2), starting at r_2 = Gamma(3-alpha)/3!.
  double ratio = std::exp(specfun::log_gamma(3.0 - alpha)) / 6.0;
  SeriesResult out;
  double comp = 0.0;
  constexpr std::size_t kMaxTerms = 100000000;
  for (std::size_t n = 2; n < kMaxTerms; ++n) {
    const double term = ratio * ratio;
    const double y = term - comp;
    const double t = out.sum + y;
    comp = (t - out.sum) - y;
    out.sum = t;
    out.last_index = n;
    out.last_term = term;
    // Terms decay like n^{-(2 alpha + 2)}; bound the tail by the integral.
    const double x = static_cast<double>(n);
    if (term * x / (2.0 * alpha + 1.0) < tail_tol) break;
    ratio *= (x + 1.0 - alpha) / (x + 2.0);
  }
  return out;
}

}  // namespace fracspec::glweights
