#include "fracspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fracspec/errors.hpp"
#include "fracspec/glweights.hpp"
#include "fracspec/specfun.hpp"

namespace fracspec::spectra {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

// Rotate rows p and q of a row-major buffer: (x, y) -> (c x - s y, s x + c y).
void rotate_rows(std::span<double> xp, std::span<double> xq, double c, double s) {
  for (std::size_t k = 0; k < xp.size(); ++k) {
    const double x = xp[k];
    const double y = xq[k];
    xp[k] = c * x - s * y;
    xq[k] = s * x + c * y;
  }
}

}  // namespace

EigenResult jacobi_eigen(const DenseMatrix& input, double tol, int max_sweeps) {
  if (!(tol > 0.0)) throw DomainError("jacobi_eigen: tol must be > 0");
  const std::size_t n = input.size();
  const double norm = input.frobenius_norm();
  if (input.asymmetry() > 1e-12 * std::max(1.0, norm)) {
    throw DomainError("jacobi_eigen: matrix is not symmetric");
  }

  DenseMatrix a = input;
  DenseMatrix vt = DenseMatrix::identity(n);  // rows accumulate eigenvectors
  EigenResult out;

  while (off_diagonal_norm(a) > tol * norm) {
    if (out.sweeps >= max_sweeps) {
      std::ostringstream msg;
      msg << "jacobi_eigen: no convergence after " << max_sweeps << " sweeps (n = " << n << ")";
      throw ConvergenceError(msg.str());
    }
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- J^T A J: rows first, then mirror into the columns.
        rotate_rows(a.row(p), a.row(q), c, s);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(k, p) = a(p, k);
          a(k, q) = a(q, k);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        rotate_rows(vt.row(p), vt.row(q), c, s);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&a](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors = DenseMatrix(n);
  for (std::size_t r = 0; r < n; ++r) {
    out.values[r] = a(order[r], order[r]);
    const auto src = vt.row(order[r]);
    std::copy(src.begin(), src.end(), out.vectors.row(r).begin());
  }
  return out;
}

LogDet lu_logdet(const DenseMatrix& input) {
  DenseMatrix lu = input;
  const std::size_t n = lu.size();
  LogDet out{1, 0.0};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    const double piv = lu(pivot, col);
    if (std::abs(piv) < 1e-300) return {0, -HUGE_VAL};
    if (pivot != col) {
      std::swap_ranges(lu.row(col).begin(), lu.row(col).end(), lu.row(pivot).begin());
      out.sign = -out.sign;
    }
    if (piv < 0.0) out.sign = -out.sign;
    out.log_abs += std::log(std::abs(piv));
    const auto pivot_row = lu.row(col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double factor = lu(r, col) / piv;
      if (factor == 0.0) continue;
      auto target = lu.row(r);
      for (std::size_t j = col + 1; j < n; ++j) target[j] -= factor * pivot_row[j];
      target[col] = 0.0;
    }
  }
  return out;
}

EigenResult tridiagonal_exact(std::size_t n) {
  if (n < 1) throw DomainError("tridiagonal_exact: n must be >= 1");
  const double h = specfun::kPi / static_cast<double>(n + 1);
  const double norm = std::sqrt(2.0 / static_cast<double>(n + 1));
  EigenResult out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n);
  for (std::size_t k = 1; k <= n; ++k) {
    out.values[k - 1] = 2.0 - 2.0 * std::cos(static_cast<double>(k) * h);
    auto row = out.vectors.row(k - 1);
    for (std::size_t m = 0; m < n; ++m) {
      row[m] = norm * std::sin(static_cast<double>(k * (m + 1)) * h);
    }
  }
  return out;
}

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

ParityCheck classify_parity(std::span<const double> x) {
  const std::size_t n = x.size();
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double flipped = x[n - 1 - i];
    even += (flipped - x[i]) * (flipped - x[i]);
    odd += (flipped + x[i]) * (flipped + x[i]);
  }
  if (even <= odd) return {Parity::Even, std::sqrt(even)};
  return {Parity::Odd, std::sqrt(odd)};
}

SpectralReport spectral_report(const toeplitz::StableParams& params) {
  const auto op = toeplitz::assemble(params);
  const DenseMatrix m = op.dense();
  const std::size_t n = m.size();

  SpectralReport rep;
  rep.n = n;
  rep.alpha = params.alpha();
  rep.beta = params.beta();
  const LogDet ld = lu_logdet(m);
  rep.log_det = ld.log_abs;
  rep.det_sign = ld.sign;
  rep.mean = m.trace() / static_cast<double>(n);
  if (params.beta() != 0.0) return rep;

  const EigenResult eig = jacobi_eigen(m);
  rep.has_eigenvalues = true;
  rep.eigenvalues = eig.values;
  long double sum = 0.0L;
  for (const double v : eig.values) sum += v;
  rep.mean = static_cast<double>(sum / static_cast<long double>(n));

  const double upper = std::pow(2.0, params.alpha());
  rep.in_range = std::all_of(eig.values.begin(), eig.values.end(),
                             [upper](double v) { return v > 0.0 && v < upper; });
  rep.min_gap = n > 1 ? HUGE_VAL : 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    rep.min_gap = std::min(rep.min_gap, eig.values[i] - eig.values[i - 1]);
  }
  const double spread = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
  rep.degenerate = n > 1 && rep.min_gap < 1e-12 * spread;

  std::vector<double> alternated(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = eig.vectors.row(i);
    const ParityCheck raw = classify_parity(x);
    for (std::size_t j = 0; j < n; ++j) alternated[j] = (j % 2 == 0) ? x[j] : -x[j];
    const ParityCheck trench = classify_parity(alternated);
    rep.parity_labels.push_back(raw.parity);
    rep.trench_parity_labels.push_back(trench.parity);
    rep.max_parity_residual = std::max({rep.max_parity_residual, raw.residual, trench.residual});
  }
  rep.alternating = true;
  for (std::size_t i = 1; i < n; ++i) {
    if (rep.parity_labels[i] == rep.parity_labels[i - 1]) rep.alternating = false;
  }
  rep.interlaced = rep.alternating && rep.trench_parity_labels.back() == Parity::Even;
  return rep;
}

double weight_reconstruct(const SpectralReport& report, std::size_t q) {
  if (!report.has_eigenvalues) {
    throw DomainError("weight_reconstruct: report carries no eigenvalues (beta != 0)");
  }
  if (q < 1) throw DomainError("weight_reconstruct: q must be >= 1");
  const double alpha = report.alpha;
  const double w1 = -report.mean;
  double factor = 1.0;  // (1-alpha)_{q-1} / q!
  for (std::size_t j = 0; j + 1 < q; ++j) {
    factor *= (1.0 - alpha + static_cast<double>(j)) / static_cast<double>(j + 2);
  }
  return factor * w1;
}

}  // namespace fracspec::spectra
