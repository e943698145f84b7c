#include "fracspec/dense.hpp"

#include <cmath>

#include "fracspec/errors.hpp"

namespace fracspec {

double DenseMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return worst;
}

double DenseMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const double v : data_) sum += v * v;
  return std::sqrt(sum);
}

double DenseMatrix::trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw DomainError("matrix product: size mismatch");
  const std::size_t n = a.size();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

DenseMatrix exchange_matrix(std::size_t n) {
  DenseMatrix j(n);
  for (std::size_t i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
  return j;
}

}  // namespace fracspec
