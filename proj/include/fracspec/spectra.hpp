#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fracspec/dense.hpp"
#include "fracspec/toeplitz.hpp"

namespace fracspec::spectra {

struct EigenResult {
  std::vector<double> values;  ///< ascending
  DenseMatrix vectors;         ///< row i is the unit eigenvector of values[i]
  int sweeps = 0;
};

/// Cyclic Jacobi diagonalization of a symmetric matrix. Stops once the
/// off-diagonal Frobenius norm is <= tol * ||A||_F.
/// Throws DomainError if A is not symmetric to 1e-12 (relative to ||A||_F),
/// ConvergenceError if max_sweeps pass without convergence.
EigenResult jacobi_eigen(const DenseMatrix& a, double tol = 1e-14, int max_sweeps = 100);

struct LogDet {
  int sign = 0;  ///< +1, -1, or 0 when a pivot falls below 1e-300
  double log_abs = 0.0;
};

/// Partial-pivoting LU; log|det| = sum log|u_ii|.
LogDet lu_logdet(const DenseMatrix& a);

/// Closed-form spectrum of the [-1, 2, -1] matrix: 2 - 2cos(k pi/(n+1)),
/// ascending, with eigenvectors sqrt(2/(n+1)) sin(k (m+1) pi/(n+1)).
EigenResult tridiagonal_exact(std::size_t n);

enum class Parity { Even, Odd };
std::string_view to_string(Parity p);

/// Parity of x under the exchange matrix and the residual min ||Jx -+ x||.
struct ParityCheck {
  Parity parity = Parity::Even;
  double residual = 0.0;
};
ParityCheck classify_parity(std::span<const double> x);

struct SpectralReport {
  std::size_t n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  bool has_eigenvalues = false;     ///< false for beta != 0
  std::vector<double> eigenvalues;  ///< ascending, dimensionless
  double min_gap = 0.0;
  double mean = 0.0;  ///< eigenvalue mean (trace / n when beta != 0)
  double log_det = 0.0;
  int det_sign = 0;
  /// Parities of the eigenvectors of M.
  std::vector<Parity> parity_labels;
  /// Parities of D x, D = diag((-1)^i): eigenvectors of the similar matrix
  /// D M D whose symbol is nonincreasing on (0, pi).
  std::vector<Parity> trench_parity_labels;
  double max_parity_residual = 0.0;
  bool alternating = false;  ///< labels alternate along the sorted spectrum
  bool interlaced = false;   ///< alternating and top trench label even
  bool in_range = false;     ///< every eigenvalue in (0, 2^alpha)
  bool degenerate = false;   ///< some gap below 1e-12 * max|lambda|
};

SpectralReport spectral_report(const toeplitz::StableParams& params);

/// w_q from the eigenvalue mean: w_1 = -mean, w_q = (1-alpha)_{q-1}/q! w_1
/// with the rising factorial (a)_m = a (a+1) ... (a+m-1).
double weight_reconstruct(const SpectralReport& report, std::size_t q);

}  // namespace fracspec::spectra
