#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fracspec {

/// Square row-major matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  [[nodiscard]] std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  [[nodiscard]] std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }
  [[nodiscard]] std::span<const double> data() const { return data_; }

  /// Largest |a_ij - a_ji|.
  [[nodiscard]] double asymmetry() const;
  [[nodiscard]] double frobenius_norm() const;
  [[nodiscard]] double trace() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

/// Exchange matrix J (ones on the anti-diagonal).
DenseMatrix exchange_matrix(std::size_t n);

}  // namespace fracspec
