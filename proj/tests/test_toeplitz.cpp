#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "fracspec/errors.hpp"
#include "fracspec/glweights.hpp"
#include "fracspec/specfun.hpp"
#include "fracspec/toeplitz.hpp"

using namespace fracspec;
using namespace fracspec::toeplitz;
using fracspec::specfun::kPi;

namespace {

// f(theta) = sum_k m_k e^{ik theta}, summed straight from the kernel band.
std::complex<double> fourier_sum(const std::vector<double>& band, std::size_t N, double theta) {
  std::complex<long double> acc = 0.0L;
  for (std::size_t i = 0; i < band.size(); ++i) {
    const long k = static_cast<long>(i) - static_cast<long>(N);
    const long double t = static_cast<long double>(k) * theta;
    acc += static_cast<long double>(band[i]) * std::complex<long double>(std::cos(t), std::sin(t));
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

}  // namespace

TEST_CASE("kernel entries for alpha = 1.5") {
  const auto op = assemble(StableParams::unit(1.5, 0.0, 3));
  CHECK(op.m(0) == 1.5);
  CHECK(op.m(1) == -0.6875);
  CHECK(op.m(-1) == -0.6875);
  CHECK(std::abs(op.m(2) + 0.03125) < 1e-16);
  CHECK(std::abs(op.m(-2) + 0.03125) < 1e-16);
  CHECK_THROWS_AS(static_cast<void>(op.m(3)), DomainError);
}

TEST_CASE("dense matrix is Toeplitz with entry (i,j) = m_{i-j}") {
  for (double beta : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
    const auto op = assemble(StableParams::unit(1.7, beta, 9));
    const auto a = op.dense();
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = 0; j < 9; ++j) {
        CHECK(a(i, j) == op.m(static_cast<long>(i) - static_cast<long>(j)));
      }
    }
  }
}

TEST_CASE("skewness flips under transposition") {
  for (double beta : {0.2, 0.8, 1.0}) {
    const auto plus = assemble(StableParams::unit(1.4, beta, 7)).dense();
    const auto minus = assemble(StableParams::unit(1.4, -beta, 7)).dense();
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) CHECK(plus(i, j) == minus(j, i));
    }
  }
  CHECK(assemble(StableParams::unit(1.4, 0.0, 12)).dense().asymmetry() == 0.0);
}

TEST_CASE("one-sided operators at beta = +-1") {
  const auto w = glweights::weights(1.6, 6);
  const auto band = kernel_band(1.6, 1.0, 4);
  // beta = 1: m_{-1} = -w0, m_{+1} = -w2, m_{-k} = 0 and m_{+k} = -w_{k+1} for k >= 2
  CHECK(band[4 - 1] == -w[0]);
  CHECK(band[4 + 1] == -w[2]);
  for (std::size_t k = 2; k <= 4; ++k) {
    CHECK(band[4 - k] == 0.0);
    CHECK(band[4 + k] == -w[k + 1]);
  }
}

TEST_CASE("alpha = 2 reduces to the second difference matrix") {
  for (std::size_t n : {1, 2, 5, 30}) {
    const auto gl = assemble(StableParams::unit(2.0, 0.0, n)).dense();
    const auto tri = tridiagonal_laplacian(n).dense();
    CHECK(gl == tri);
  }
  // beta drops out for alpha = 2
  CHECK(assemble(StableParams::unit(2.0, 0.7, 6)).dense() == tridiagonal_laplacian(6).dense());
}

TEST_CASE("kernel row sums are minus the weight partial sums") {
  for (double alpha : {1.2, 1.5, 1.8}) {
    for (double beta : {0.0, 0.5}) {
      for (std::size_t N : {1, 2, 10, 100}) {
        long double oracle = 1.0L;
        long double c = 1.0L;
        for (std::size_t k = 1; k <= N + 1; ++k) {
          c *= 1.0L - static_cast<long double>(alpha) / k;
        }
        oracle = -c;
        CHECK(std::abs(kernel_partial_sum(alpha, beta, N) - static_cast<double>(oracle)) < 1e-13);
      }
    }
  }
}

TEST_CASE("physical scaling") {
  const StableParams p(2.0, 0.0, 1.0, 1.0, 3);
  CHECK(p.epsilon() == 0.25);
  CHECK(std::abs(p.scale() - 16.0) < 1e-13);
  const auto op = assemble(p);
  const auto phys = op.physical_dense();
  CHECK(std::abs(phys(0, 0) - 32.0) < 1e-12);
  CHECK(std::abs(phys(0, 1) + 16.0) < 1e-12);

  const StableParams q(1.5, 0.0, 2.0, 10.0, 4);
  CHECK(std::abs(q.scale() - 2.0 / (std::abs(std::cos(0.75 * kPi)) * std::pow(2.0, 1.5))) < 1e-13);
  CHECK(std::abs(StableParams::unit(1.5, 0.0, 9).scale() - std::sqrt(2.0)) < 1e-13);
  CHECK(std::abs(q.k_plus() + q.k_minus() - q.k_alpha()) < 1e-15);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(StableParams(1.0, 0.0, 1.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(StableParams(1.5, 1.5, 1.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(StableParams(1.5, 0.0, 0.0, 1.0, 3), DomainError);
  CHECK_THROWS_AS(StableParams(1.5, 0.0, 1.0, -1.0, 3), DomainError);
  CHECK_THROWS_AS(StableParams(1.5, 0.0, 1.0, 1.0, 0), DomainError);
}

TEST_CASE("closed symbol matches the Fourier sum of the kernel") {
  const std::size_t N = 100000;
  for (double alpha : {1.2, 1.5, 1.8}) {
    for (double beta : {0.0, 0.4, -1.0}) {
      const auto band = kernel_band(alpha, beta, N);
      const auto p = StableParams::unit(alpha, beta, 8);
      for (double theta : {kPi / 6.0, kPi / 3.0, kPi / 2.0, kPi, 4.0}) {
        const auto f = fourier_sum(band, N, theta);
        const auto s = symbol_closed(p, theta);
        CHECK(std::abs(s.u - f.real()) < 1e-6);
        CHECK(std::abs(s.v - f.imag()) < 1e-6);
        const auto series = symbol_series(p, theta, N);
        CHECK(std::abs(series.u - f.real()) < 1e-9);
        CHECK(std::abs(series.v - f.imag()) < 1e-9);
      }
    }
  }
}

TEST_CASE("shifted symbol is a translation by pi") {
  const auto p = StableParams::unit(1.35, 0.5, 4);
  for (double theta = -3.0; theta < 3.0; theta += 0.25) {
    const auto a = symbol_closed(p, theta, true);
    const auto b = symbol_closed(p, theta + kPi, false);
    CHECK(std::abs(a.u - b.u) < 1e-13);
    CHECK(std::abs(a.v - b.v) < 1e-13);
    const auto s = symbol_series(p, theta, 20000, true);
    CHECK(std::abs(s.u - a.u) < 1e-5);
  }
}

TEST_CASE("real part of the symbol is positive away from theta = 0") {
  for (double alpha : {1.1, 1.5, 1.9, 2.0}) {
    const auto curve = symbol_curve(StableParams::unit(alpha, 0.3, 4), 300);
    for (const auto& s : curve) CHECK(s.u > 0.0);
  }
}

TEST_CASE("symbol curve lies on the ellipse") {
  for (auto [alpha, beta] : {std::pair{1.5, 0.8}, std::pair{1.2, 0.2}, std::pair{1.9, -1.0}}) {
    const auto p = StableParams::unit(alpha, beta, 4);
    for (bool shifted : {false, true}) {
      const auto curve = symbol_curve(p, 200, shifted);
      REQUIRE(curve.size() == 200);
      for (const auto& s : curve) CHECK(ellipse_residual(alpha, beta, s) <= 1e-10);
    }
  }
  const auto curve = symbol_curve(StableParams::unit(1.5, 0.0, 4), 50);
  CHECK(curve.front().theta > 0.0);
  CHECK(curve.back().theta < 2.0 * kPi);
}

TEST_CASE("symbol period") {
  // oracle: smallest n1 with n1 (1 - p/(2q)) an integer
  for (long q = 1; q <= 12; ++q) {
    for (long p = q + 1; p <= 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      long n1 = 1;
      while ((n1 * (2 * q - p)) % (2 * q) != 0) ++n1;
      const auto r = symbol_period(p, q);
      CHECK(r.n1 == n1);
      CHECK(r.period == doctest::Approx(2.0 * kPi * n1));
    }
  }
  CHECK(symbol_period(3, 2).n1 == 4);
  CHECK(symbol_period(2, 1).period == doctest::Approx(2.0 * kPi));
  CHECK_THROWS_AS(symbol_period(6, 4), DomainError);
  CHECK_THROWS_AS(symbol_period(5, 2), DomainError);

  CHECK(period_scan_residual(1.5, 8.0 * kPi, 4000) <= 1e-9);
  CHECK(period_scan_residual(1.5, 4.0 * kPi, 4000) > 1e-2);
}

TEST_CASE("Wiener and Besov partial sums stay below their bounds") {
  for (double alpha : {1.1, 1.5, 1.9, 2.0}) {
    const auto r = wiener_besov_check(StableParams::unit(alpha, 0.0, 4), 5000);
    CHECK(r.wiener_partial < r.wiener_bound);
    CHECK(r.besov_partial < r.besov_bound);
  }
  const auto gauss = wiener_besov_check(StableParams::unit(2.0, 0.0, 4), 10);
  CHECK(gauss.wiener_partial == doctest::Approx(4.0));
  CHECK(gauss.wiener_bound == doctest::Approx(6.0));
  CHECK(gauss.besov_partial == doctest::Approx(8.0));
}

TEST_CASE("symbol CSV layout") {
  std::ostringstream out;
  const auto curve = symbol_curve(StableParams::unit(1.5, 0.5, 4), 3);
  write_symbol_csv(out, curve);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,u,v");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 2);
    ++rows;
  }
  CHECK(rows == 3);
}
