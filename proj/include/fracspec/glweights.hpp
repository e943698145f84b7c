#pragma once

#include <cstddef>
#include <vector>

namespace fracspec::glweights {

/// Prefix w_0..w_N of the Grunwald-Letnikov weights w_n = (-1)^n C(alpha, n).
struct WeightSequence {
  double alpha = 2.0;
  std::vector<double> values;

  [[nodiscard]] std::size_t size() const { return values.size(); }
  [[nodiscard]] double operator[](std::size_t n) const { return values[n]; }
};

/// Throws DomainError unless 1 < alpha <= 2.
void require_alpha(double alpha);

/// w_0..w_count via w_n = (1 - (alpha+1)/n) w_{n-1}.
WeightSequence weights(double alpha, std::size_t count);

/// (-1)^n C(alpha, n) through log-Gamma differences, with the sign tracked
/// separately. Independent of the recursion in weights().
double weight_binomial(double alpha, std::size_t n);

/// S_N = sum_{n=0}^N w_n with compensated summation. Equals (-1)^N C(alpha-1, N)
/// and tends to zero as N grows.
double weight_partial_sum(double alpha, std::size_t N);

/// Ratio test expression ((n+1)/n) (n+1-alpha)/(n+2)^2 as written for the
/// series a_n = n (Gamma(n+1-alpha)/Gamma(n+2))^2. Note the exact term ratio is
/// ((n+1)/n) ((n+1-alpha)/(n+2))^2, see besov_term_ratio().
double dalembert_ratio(double alpha, std::size_t n);

/// Exact a_{n+1}/a_n for a_n = n (Gamma(n+1-alpha)/Gamma(n+2))^2, n >= 2.
double besov_term_ratio(double alpha, std::size_t n);

struct SeriesResult {
  double sum = 0.0;
  std::size_t last_index = 0;  ///< index of the last term added
  double last_term = 0.0;
};

/// sum_{n=2}^{N} (Gamma(n+1-alpha)/Gamma(n+2))^2, with N grown until the
/// integral tail bound of the remaining terms drops below tail_tol.
SeriesResult gamma_ratio_square_sum(double alpha, double tail_tol = 1e-10);

}  // namespace fracspec::glweights
