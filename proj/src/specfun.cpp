#include "fracspec/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "fracspec/errors.hpp"

namespace fracspec::specfun {

namespace {

// B_{2k} for k = 1..8
constexpr std::array<long double, 8> kBernoulli = {
    1.0L / 6.0L,    -1.0L / 30.0L,     1.0L / 42.0L, -1.0L / 30.0L,
    5.0L / 66.0L,   -691.0L / 2730.0L, 7.0L / 6.0L,  -3617.0L / 510.0L};

constexpr long double kShiftThreshold = 16.0L;

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double result;
  double error;
  int depth;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                      int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  if (!std::isfinite(kronrod)) {
    std::ostringstream msg;
    msg << "integrate: non-finite integrand on [" << a << ", " << b << "]";
    throw ConvergenceError(msg.str());
  }
  return {a, b, kronrod, std::abs(kronrod - gauss), depth};
}

// Breakpoints a = x_0 < ... < x_m = b with widths halving toward a.
void graded_toward_left(double a, double b, int levels, std::vector<double>& cuts) {
  std::vector<double> pts;
  double width = b - a;
  for (int j = 0; j < levels; ++j) {
    width *= 0.5;
    const double x = a + width;
    if (!(x > a)) break;
    pts.push_back(x);
  }
  cuts.push_back(a);
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) cuts.push_back(*it);
  cuts.push_back(b);
}

void graded_toward_right(double a, double b, int levels, std::vector<double>& cuts) {
  double width = b - a;
  cuts.push_back(a);
  for (int j = 0; j < levels; ++j) {
    width *= 0.5;
    const double x = b - width;
    if (!(x < b)) break;
    cuts.push_back(x);
  }
  cuts.push_back(b);
}

}  // namespace

long double log_gamma_ext(long double x) {
  if (!(x > 0.0L) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be positive and finite");
  }
  long double log_shift = 0.0L;
  if (x < kShiftThreshold) {
    long double prod = 1.0L;
    while (x < kShiftThreshold) {
      prod *= x;
      x += 1.0L;
    }
    log_shift = std::log(prod);
  }
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double series = 0.0L;
  long double power = inv;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const long double two_k = 2.0L * static_cast<long double>(k);
    series += kBernoulli[k - 1] / (two_k * (two_k - 1.0L)) * power;
    power *= inv2;
  }
  constexpr long double kHalfLog2Pi = 0.918938533204672741780329736405617639861L;
  return (x - 0.5L) * std::log(x) - x + kHalfLog2Pi + series - log_shift;
}

double log_gamma(double x) { return static_cast<double>(log_gamma_ext(x)); }

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("digamma: argument must be positive and finite");
  }
  long double y = x;
  long double acc = 0.0L;
  while (y < kShiftThreshold) {
    acc -= 1.0L / y;
    y += 1.0L;
  }
  const long double inv2 = 1.0L / (y * y);
  long double series = 0.0L;
  long double power = inv2;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    series += kBernoulli[k - 1] / (2.0L * static_cast<long double>(k)) * power;
    power *= inv2;
  }
  return static_cast<double>(acc + std::log(y) - 0.5L / y - series);
}

double lobachevsky(double x) {
  if (!(x >= 0.0) || !(x < 0.5 * kPi)) {
    throw DomainError("lobachevsky: argument must lie in [0, pi/2)");
  }
  if (x == 0.0) return 0.0;
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-13;
  // Flag only when the log(cos) blow-up at pi/2 is close enough to matter.
  spec.singular_right = (0.5 * kPi - x) < 0.25;
  return integrate([](double u) { return -std::log(std::cos(u)); }, 0.0, x, spec);
}

double catalan() { return kCatalan; }

double catalan_partial_sum(long terms) {
  double sum = 0.0;
  double comp = 0.0;
  for (long m = 0; m <= terms; ++m) {
    const double odd = 2.0 * static_cast<double>(m) + 1.0;
    const double term = (m % 2 == 0 ? 1.0 : -1.0) / (odd * odd);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

double catalan_series(int terms) {
  const long double n = terms;
  long double d = std::pow(3.0L + std::sqrt(8.0L), n);
  d = 0.5L * (d + 1.0L / d);
  long double b = -1.0L;
  long double c = -d;
  long double s = 0.0L;
  for (int k = 0; k < terms; ++k) {
    const long double kk = k;
    c = b - c;
    const long double odd = 2.0L * kk + 1.0L;
    s += c / (odd * odd);
    b = (kk + n) * (kk - n) * b / ((kk + 0.5L) * (kk + 1.0L));
  }
  return static_cast<double>(s / d);
}

double euler_gamma_limit(int base, int levels) {
  std::vector<std::vector<long double>> table(static_cast<std::size_t>(levels));
  long double harmonic = 0.0L;
  long double comp = 0.0L;
  long m = 0;
  for (int j = 0; j < levels; ++j) {
    const long target = static_cast<long>(base) << j;
    for (; m < target;) {
      ++m;
      const long double y = 1.0L / static_cast<long double>(m) - comp;
      const long double t = harmonic + y;
      comp = (t - harmonic) - y;
      harmonic = t;
    }
    auto& row = table[static_cast<std::size_t>(j)];
    row.push_back(harmonic - std::log(static_cast<long double>(target)));
    // The error expansion of H_m - log m runs in powers of 1/m.
    for (int l = 1; l <= j; ++l) {
      const long double factor = std::ldexp(1.0L, l) - 1.0L;
      const auto& prev = table[static_cast<std::size_t>(j - 1)];
      row.push_back(row[static_cast<std::size_t>(l - 1)] +
                    (row[static_cast<std::size_t>(l - 1)] - prev[static_cast<std::size_t>(l - 1)]) /
                        factor);
    }
  }
  return static_cast<double>(table.back().back());
}

void validate_constants() {
  auto check = [](const char* name, double stored, long double derived, double tol) {
    if (std::abs(static_cast<long double>(stored) - derived) > tol) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "stored constant " << name << " = " << stored << " disagrees with derived "
          << static_cast<double>(derived);
      throw std::logic_error(msg.str());
    }
  };
  // Machin: pi/4 = 4 atan(1/5) - atan(1/239), atan by its Taylor series.
  auto atan_series = [](long double x) {
    long double sum = 0.0L;
    long double power = x;
    for (int k = 0; k < 40; ++k) {
      sum += (k % 2 == 0 ? 1.0L : -1.0L) * power / (2.0L * k + 1.0L);
      power *= x * x;
    }
    return sum;
  };
  check("pi", kPi, 4.0L * (4.0L * atan_series(1.0L / 5.0L) - atan_series(1.0L / 239.0L)),
        1e-15);
  long double ln2 = 0.0L;
  for (int k = 1; k < 80; ++k) ln2 += std::ldexp(1.0L, -k) / k;
  check("ln2", kLn2, ln2, 1e-15);
  check("euler_gamma", kEulerGamma, euler_gamma_limit(), 1e-12);
  check("catalan", kCatalan, catalan_series(), 1e-12);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSpec& spec) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("integrate: require finite a < b");
  }
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol >= 0.0) || spec.max_depth < 1) {
    throw DomainError("integrate: require abs_tol > 0, rel_tol >= 0, max_depth >= 1");
  }

  const int grading = std::min(spec.max_depth, 52);
  std::vector<double> cuts;
  if (spec.singular_left && spec.singular_right) {
    const double mid = 0.5 * (a + b);
    graded_toward_left(a, mid, grading, cuts);
    std::vector<double> upper;
    graded_toward_right(mid, b, grading, upper);
    cuts.insert(cuts.end(), upper.begin() + 1, upper.end());
  } else if (spec.singular_left) {
    graded_toward_left(a, b, grading, cuts);
  } else if (spec.singular_right) {
    graded_toward_right(a, b, grading, cuts);
  } else {
    cuts = {a, b};
  }

  std::priority_queue<Segment> heap;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) heap.push(gauss_kronrod(f, cuts[i], cuts[i + 1], 0));
  }

  constexpr std::size_t kMaxSegments = 500000;
  auto totals = [&heap]() {
    // Summation over a copy keeps the heap intact; segment counts are small.
    auto copy = heap;
    double result = 0.0;
    double error = 0.0;
    while (!copy.empty()) {
      result += copy.top().result;
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{result, error};
  };

  double result = 0.0;
  double error = 0.0;
  std::tie(result, error) = totals();
  while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(result))) {
    Segment worst = heap.top();
    if (worst.depth >= spec.max_depth || heap.size() >= kMaxSegments) {
      std::ostringstream msg;
      msg << "integrate: tolerance not reached on [" << a << ", " << b
          << "], error estimate " << error;
      throw ConvergenceError(msg.str());
    }
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    const Segment right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    result += left.result + right.result - worst.result;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(result))) {
      std::tie(result, error) = totals();
    }
  }
  return result;
}

}  // namespace fracspec::specfun
