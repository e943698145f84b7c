#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "fracspec/errors.hpp"
#include "fracspec/glweights.hpp"
#include "fracspec/specfun.hpp"
#include "fracspec/spectra.hpp"
#include "fracspec/toeplitz.hpp"

#ifdef FRACSPEC_HAVE_EIGEN
#include <Eigen/Dense>
#endif

using namespace fracspec;
using namespace fracspec::spectra;
using fracspec::specfun::kPi;
using toeplitz::StableParams;

namespace {

double det3(const DenseMatrix& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

// Trigonometric Cardano roots of a symmetric 3x3, ascending.
std::vector<double> cardano_sym3(const DenseMatrix& a) {
  const double q = a.trace() / 3.0;
  const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
  const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                    (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);
  DenseMatrix b(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
  }
  const double r = std::clamp(det3(b) / 2.0, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;
  std::vector<double> eig{q + 2.0 * p * std::cos(phi), q + 2.0 * p * std::cos(phi + 2.0 * kPi / 3.0), 0.0};
  eig[2] = 3.0 * q - eig[0] - eig[1];
  std::sort(eig.begin(), eig.end());
  return eig;
}

DenseMatrix random_symmetric(std::size_t n, std::mt19937& rng) {
  std::normal_distribution<double> g;
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = g(rng);
  }
  return a;
}

double residual_norm(const DenseMatrix& a, std::span<const double> v, double lambda) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a(i, j) * v[j];
    worst = std::max(worst, std::abs(s - lambda * v[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("second difference matrix: determinant and spectrum") {
  const auto b4 = toeplitz::tridiagonal_laplacian(4).dense();
  const auto ld = lu_logdet(b4);
  CHECK(ld.sign == 1);
  CHECK(std::abs(std::exp(ld.log_abs) - 5.0) < 1e-13);
  const auto eig = jacobi_eigen(b4);
  const double expected[] = {0.3819660112501051, 1.381966011250105, 2.618033988749895, 3.618033988749895};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(eig.values[i] - expected[i]) < 1e-13);

  for (std::size_t n = 1; n <= 60; ++n) {
    const auto op = toeplitz::assemble(StableParams::unit(2.0, 0.0, n));
    const auto l = lu_logdet(op.dense());
    CHECK(std::abs(std::exp(l.log_abs) / static_cast<double>(n + 1) - 1.0) < 1e-12);
  }
}

TEST_CASE("closed-form tridiagonal eigenpairs") {
  for (std::size_t n : {1, 3, 8, 25}) {
    const auto exact = tridiagonal_exact(n);
    const auto a = toeplitz::tridiagonal_laplacian(n).dense();
    for (std::size_t k = 0; k < n; ++k) {
      const double lambda = 2.0 - 2.0 * std::cos(static_cast<double>(k + 1) * kPi / static_cast<double>(n + 1));
      CHECK(std::abs(exact.values[k] - lambda) < 1e-14);
      CHECK(residual_norm(a, exact.vectors.row(k), exact.values[k]) < 1e-13);
    }
    const auto eig = jacobi_eigen(a);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(eig.values[k] - exact.values[k]) < 1e-12);
  }
}

TEST_CASE("alpha = 1.5 small matrices") {
  const auto m2 = toeplitz::assemble(StableParams::unit(1.5, 0.0, 2)).dense();
  const auto e2 = jacobi_eigen(m2);
  CHECK(e2.values[0] == doctest::Approx(0.8125).epsilon(1e-15));
  CHECK(e2.values[1] == doctest::Approx(2.1875).epsilon(1e-15));

  const auto m3 = toeplitz::assemble(StableParams::unit(1.5, 0.0, 3)).dense();
  CHECK(det3(m3) == 1.926025390625);  // dyadic entries, exact
  const auto ld = lu_logdet(m3);
  CHECK(ld.sign == 1);
  CHECK(std::abs(std::exp(ld.log_abs) - 1.926025390625) < 1e-14);

  const auto oracle = cardano_sym3(m3);
  const auto e3 = jacobi_eigen(m3);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(e3.values[i] - oracle[i]) < 1e-12);
  CHECK(std::abs(e3.values[0] + e3.values[1] + e3.values[2] - 4.5) < 1e-13);
}

TEST_CASE("Jacobi on random symmetric matrices") {
  std::mt19937 rng(77);
  for (std::size_t n : {1, 2, 5, 17, 40}) {
    const auto a = random_symmetric(n, rng);
    const auto r = jacobi_eigen(a);
    REQUIRE(r.values.size() == n);
    CHECK(std::is_sorted(r.values.begin(), r.values.end()));
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      sum += r.values[k];
      CHECK(residual_norm(a, r.vectors.row(k), r.values[k]) < 1e-11 * std::max(1.0, a.frobenius_norm()));
      for (std::size_t l = 0; l < n; ++l) {
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += r.vectors(k, i) * r.vectors(l, i);
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-12);
      }
    }
    CHECK(std::abs(sum - a.trace()) < 1e-11 * std::max(1.0, std::abs(a.trace())) + 1e-11);
#ifdef FRACSPEC_HAVE_EIGEN
    Eigen::MatrixXd e(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) e(i, j) = a(i, j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(e);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(r.values[k] - solver.eigenvalues()(static_cast<Eigen::Index>(k))) < 1e-11);
    }
    const double eigen_logdet = std::log(std::abs(e.partialPivLu().determinant()));
    CHECK(std::abs(lu_logdet(a).log_abs - eigen_logdet) < 1e-10);
#endif
  }
}

TEST_CASE("LU determinant sign and product of eigenvalues") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_symmetric(6, rng);
    const auto r = jacobi_eigen(a);
    double log_abs = 0.0;
    int sign = 1;
    for (double v : r.values) {
      log_abs += std::log(std::abs(v));
      if (v < 0.0) sign = -sign;
    }
    const auto ld = lu_logdet(a);
    CHECK(ld.sign == sign);
    CHECK(std::abs(ld.log_abs - log_abs) < 1e-10);
  }
  CHECK(lu_logdet(exchange_matrix(2)).sign == -1);
  CHECK(lu_logdet(exchange_matrix(4)).sign == 1);
  CHECK(lu_logdet(DenseMatrix(3, 1.0)).sign == 0);
}

TEST_CASE("Jacobi rejects asymmetric input") {
  const auto skew = toeplitz::assemble(StableParams::unit(1.5, 0.5, 4)).dense();
  CHECK_THROWS_AS(jacobi_eigen(skew), DomainError);
}

TEST_CASE("parity classification") {
  const std::vector<double> even{1.0, 2.0, 2.0, 1.0};
  const std::vector<double> odd{1.0, -2.0, 2.0, -1.0};
  CHECK(classify_parity(even).parity == Parity::Even);
  CHECK(classify_parity(even).residual == 0.0);
  CHECK(classify_parity(odd).parity == Parity::Odd);
  CHECK(to_string(Parity::Even) == "even");
}

TEST_CASE("spectral structure for symmetric operators") {
  for (double alpha : {1.2, 1.5, 1.8, 2.0}) {
    for (std::size_t n : {5, 20, 51}) {
      const auto p = StableParams::unit(alpha, 0.0, n);
      const auto m = toeplitz::assemble(p).dense();
      const auto j = exchange_matrix(n);
      CHECK(j * m == m * j);

      const auto r = spectral_report(p);
      REQUIRE(r.has_eigenvalues);
      CHECK(r.in_range);
      CHECK_FALSE(r.degenerate);
      CHECK(r.min_gap > 1e-10 * m.frobenius_norm());
      CHECK(std::abs(r.mean - alpha) < 1e-10);
      CHECK(r.alternating);
      CHECK(r.interlaced);
      CHECK(r.trench_parity_labels.back() == Parity::Even);
      CHECK(r.max_parity_residual < 1e-10);
      CHECK(r.det_sign == 1);
      // the smallest eigenvalue has an even (single-signed) eigenvector
      CHECK(r.parity_labels.front() == Parity::Even);
      for (double lambda : r.eigenvalues) {
        CHECK(lambda > 0.0);
        CHECK(lambda < std::pow(2.0, alpha));
      }
    }
  }
}

TEST_CASE("skewed operators report trace data only") {
  const auto r = spectral_report(StableParams::unit(1.5, 0.4, 10));
  CHECK_FALSE(r.has_eigenvalues);
  CHECK(std::abs(r.mean - 1.5) < 1e-14);
  CHECK(r.det_sign == 1);
  CHECK_THROWS_AS(weight_reconstruct(r, 2), DomainError);
}

TEST_CASE("weights recovered from the eigenvalue mean") {
  for (double alpha : {1.3, 1.5, 2.0}) {
    const auto r = spectral_report(StableParams::unit(alpha, 0.0, 12));
    const auto w = glweights::weights(alpha, 8);
    for (std::size_t q = 1; q <= 8; ++q) {
      CHECK(std::abs(weight_reconstruct(r, q) - w[q]) < 1e-10);
    }
  }
}
