#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "fracspec/dense.hpp"

namespace fracspec::toeplitz {

/// Parameters of the discretized operator on (0, L) with n interior grid
/// points. The grid spacing is always derived: epsilon = L / (n + 1).
class StableParams {
 public:
  /// Validates 1 < alpha <= 2, |beta| <= 1, k_alpha > 0, length > 0, n >= 1.
  StableParams(double alpha, double beta, double k_alpha, double length, std::size_t n);

  /// K_alpha = 1 and epsilon = 1 (L = n + 1).
  static StableParams unit(double alpha, double beta, std::size_t n);

  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double beta() const { return beta_; }
  [[nodiscard]] double k_alpha() const { return k_alpha_; }
  [[nodiscard]] double k_plus() const { return 0.5 * k_alpha_ * (1.0 + beta_); }
  [[nodiscard]] double k_minus() const { return 0.5 * k_alpha_ * (1.0 - beta_); }
  [[nodiscard]] double length() const { return length_; }
  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] double epsilon() const { return length_ / static_cast<double>(n_ + 1); }
  /// K_alpha / (|cos(pi alpha / 2)| epsilon^alpha).
  [[nodiscard]] double scale() const;

 private:
  double alpha_;
  double beta_;
  double k_alpha_;
  double length_;
  std::size_t n_;
};

/// Dimensionless kernel m_k, -(n-1) <= k <= n-1, of the n x n truncation.
/// Entry (i, j) of the dimensionless matrix is m_{i-j}; the physical matrix
/// is scale * M.
class ToeplitzOperator {
 public:
  ToeplitzOperator(StableParams params, std::vector<double> kernel);

  [[nodiscard]] std::size_t n() const { return params_.n(); }
  [[nodiscard]] const StableParams& params() const { return params_; }
  [[nodiscard]] double scale() const { return params_.scale(); }
  /// m_k for |k| <= n-1.
  [[nodiscard]] double m(long k) const;
  [[nodiscard]] std::span<const double> kernel() const { return kernel_; }

  [[nodiscard]] DenseMatrix dense() const;
  [[nodiscard]] DenseMatrix physical_dense() const;

 private:
  StableParams params_;
  std::vector<double> kernel_;  // index k + n - 1
};

/// Kernel entries m_{-N}..m_{N} of the untruncated operator (index k + N).
std::vector<double> kernel_band(double alpha, double beta, std::size_t N);

ToeplitzOperator assemble(const StableParams& params);

/// The [-1, 2, -1] second-difference matrix, carried with alpha = 2, beta = 0.
ToeplitzOperator tridiagonal_laplacian(std::size_t n, double k2 = 1.0, double length = 0.0);

/// sum_{|k|<=N} m_k of the untruncated kernel.
double kernel_partial_sum(double alpha, double beta, std::size_t N);

struct SymbolSample {
  double theta = 0.0;
  double u = 0.0;
  double v = 0.0;
  bool shifted = false;  ///< origin moved by pi: |2cos(theta/2)| form
};

/// Dimensionless closed-form symbol. Multiply u and v by params.scale() for
/// physical values.
SymbolSample symbol_closed(const StableParams& params, double theta, bool shifted = false);

/// Partial sums of the cosine/sine series of the symbol with `terms` terms.
SymbolSample symbol_series(const StableParams& params, double theta, std::size_t terms,
                           bool shifted = false);

/// `points` samples with theta uniform on the open interval (0, 2pi), or
/// (-pi, pi) for the shifted form.
std::vector<SymbolSample> symbol_curve(const StableParams& params, std::size_t points,
                                       bool shifted = false);

/// |u^2 + (v/beta)^2 - |2 sin(theta/2)|^{2 alpha}| (v term dropped for beta = 0).
double ellipse_residual(double alpha, double beta, const SymbolSample& sample);

/// |2 sin(theta/2)|^alpha cos((theta - pi)(1 - alpha/2)), evaluated literally
/// (not reduced modulo 2 pi).
double symbol_profile(double alpha, double theta);

struct SymbolPeriod {
  long n1 = 1;
  double period = 0.0;
};

/// Period of symbol_profile for alpha = p/q in (1, 2] with gcd(p, q) = 1.
SymbolPeriod symbol_period(long p, long q);

/// max |g(theta + T) - g(theta)| over `grid` points theta in [0, T).
double period_scan_residual(double alpha, double period, std::size_t grid);

struct WienerBesov {
  double wiener_partial = 0.0;
  double wiener_bound = 0.0;
  double besov_partial = 0.0;
  double besov_bound = 0.0;
};

/// Partial sums sum_{|k|<=N} |f_k| and sum_{|k|<=N} (|k|+1)|f_k|^2 with
/// f_k = (K_alpha / |cos(pi alpha/2)|) m_k (unit grid spacing), and the
/// corresponding analytic bounds.
WienerBesov wiener_besov_check(const StableParams& params, std::size_t N);

/// CSV with header theta,u,v.
void write_symbol_csv(std::ostream& out, std::span<const SymbolSample> samples);

}  // namespace fracspec::toeplitz
