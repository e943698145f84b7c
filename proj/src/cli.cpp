#include "fracspec/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/format.hpp"
#include "fracspec/glweights.hpp"
#include "fracspec/json_io.hpp"
#include "fracspec/spectra.hpp"
#include "fracspec/specfun.hpp"
#include "fracspec/szego.hpp"
#include "fracspec/toeplitz.hpp"

namespace fracspec::cli {

namespace {

struct Options {
  double alpha = 0.0;
  double beta = 0.0;
  std::size_t n = 0;
  std::size_t count = 0;
  double k_alpha = 1.0;
  double length = 0.0;  // 0 -> n + 1 (unit spacing)
  std::size_t points = 200;
  std::size_t terms = 0;  // 0 -> closed form
  std::size_t kmax = 20;
  long m = -1;  // -1 -> kmax
  double scale = 1.0;
  std::string method = "quadrature";
  std::string n_list = "50,100,200,400";
  bool shifted = false;
  bool unshifted = false;
  bool physical = false;
  std::string format = "csv";
  std::string output;
};

struct Artifact {
  std::string body;
  std::string summary;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const CLI::Validator kAlphaRange(
    [](std::string& input) -> std::string {
      double value = 0.0;
      try {
        std::size_t used = 0;
        value = std::stod(input, &used);
        if (used != input.size()) return "alpha must be a number";
      } catch (const std::exception&) {
        return "alpha must be a number";
      }
      if (!(value > 1.0 && value <= 2.0)) return "alpha must lie in (1, 2], got " + input;
      return {};
    },
    "in (1, 2]", "alpha range");

specfun::QuadratureSpec quadrature_from_env() {
  specfun::QuadratureSpec spec;
  if (const char* raw = std::getenv(kToleranceEnv); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const double tol = std::strtod(raw, &end);
    if (end == raw || *end != '\0' || !(tol > 0.0)) {
      throw UsageError(std::string(kToleranceEnv) + " must be a positive number");
    }
    spec.abs_tol = tol;
    spec.rel_tol = tol;
  }
  return spec;
}

std::string dump_json(const nlohmann::json& doc) {
  require_finite(doc);
  return doc.dump(2) + "\n";
}

std::size_t grid_size(const Options& o) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  return o.n;
}

toeplitz::StableParams params_of(const Options& o, std::size_t n) {
  const double length = o.length > 0.0 ? o.length : static_cast<double>(n + 1);
  return {o.alpha, o.beta, o.k_alpha, length, n};
}

Artifact cmd_weights(const Options& o) {
  const auto seq = glweights::weights(o.alpha, o.count);
  Artifact a;
  if (o.format == "json") {
    a.body = dump_json(to_json(seq));
  } else {
    std::ostringstream csv;
    csv << "n,w\n";
    for (std::size_t i = 0; i < seq.size(); ++i) csv << i << ',' << format_double(seq[i]) << '\n';
    a.body = csv.str();
  }
  a.summary = "weights: alpha=" + format_double(o.alpha) + " w_0..w_" + std::to_string(o.count) +
              " partial_sum=" + format_double(glweights::weight_partial_sum(o.alpha, o.count));
  return a;
}

Artifact cmd_matrix(const Options& o) {
  const auto op = toeplitz::assemble(params_of(o, grid_size(o)));
  Artifact a;
  if (o.format == "json") {
    a.body = dump_json(to_json(op, o.physical));
  } else {
    const DenseMatrix m = o.physical ? op.physical_dense() : op.dense();
    std::ostringstream csv;
    csv << "i,j,value\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        csv << i << ',' << j << ',' << format_double(m(i, j)) << '\n';
      }
    }
    a.body = csv.str();
  }
  a.summary = "matrix: n=" + std::to_string(op.n()) + " m_0=" + format_double(op.m(0)) +
              " scale=" + format_double(op.scale());
  return a;
}

Artifact cmd_spectrum(const Options& o) {
  const auto rep = spectra::spectral_report(params_of(o, grid_size(o)));
  Artifact a;
  if (o.format == "json") {
    a.body = dump_json(to_json(rep));
  } else {
    if (!rep.has_eigenvalues) {
      throw UsageError("CSV spectrum output needs --beta 0; use --format json for beta != 0");
    }
    std::ostringstream csv;
    csv << "index,eigenvalue,parity,trench_parity\n";
    for (std::size_t i = 0; i < rep.eigenvalues.size(); ++i) {
      csv << i << ',' << format_double(rep.eigenvalues[i]) << ','
          << spectra::to_string(rep.parity_labels[i]) << ','
          << spectra::to_string(rep.trench_parity_labels[i]) << '\n';
    }
    a.body = csv.str();
  }
  a.summary = "spectrum: n=" + std::to_string(rep.n) + " mean=" + format_double(rep.mean) +
              " log_det=" + format_double(rep.log_det) + " det_sign=" +
              std::to_string(rep.det_sign);
  return a;
}

Artifact cmd_symbol(const Options& o) {
  if (o.points < 2) throw UsageError("--points must be >= 2");
  const std::size_t n = o.n > 0 ? o.n : o.points;
  const auto params = params_of(o, n);
  std::vector<toeplitz::SymbolSample> samples;
  if (o.terms > 0) {
    for (const auto& s : toeplitz::symbol_curve(params, o.points, o.shifted)) {
      samples.push_back(toeplitz::symbol_series(params, s.theta, o.terms, o.shifted));
    }
  } else {
    samples = toeplitz::symbol_curve(params, o.points, o.shifted);
  }
  double worst = 0.0;
  for (const auto& s : samples) {
    worst = std::max(worst, toeplitz::ellipse_residual(o.alpha, o.beta, s));
  }
  if (o.physical) {
    for (auto& s : samples) {
      s.u *= params.scale();
      s.v *= params.scale();
    }
  }
  Artifact a;
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : samples) rows.push_back({{"theta", s.theta}, {"u", s.u}, {"v", s.v}});
    a.body = dump_json({{"schema", kJsonSchema},
                        {"alpha", o.alpha},
                        {"beta", o.beta},
                        {"shifted", o.shifted},
                        {"physical", o.physical},
                        {"samples", std::move(rows)}});
  } else {
    std::ostringstream csv;
    toeplitz::write_symbol_csv(csv, samples);
    a.body = csv.str();
  }
  a.summary = "symbol: points=" + std::to_string(samples.size()) +
              " max_ellipse_residual=" + format_double(worst);
  return a;
}

Artifact cmd_szego(const Options& o) {
  const auto method = szego::method_from_string(o.method);
  const std::size_t m = o.m < 0 ? o.kmax : static_cast<std::size_t>(o.m);
  if (m > o.kmax) throw UsageError("--m must not exceed --kmax");
  const bool shifted = !o.unshifted;
  const auto coeffs =
      szego::compute_coefficients(o.alpha, o.scale, o.kmax, method, shifted, quadrature_from_env());
  const auto constants = szego::szego_constants(coeffs, m);
  Artifact a;
  if (o.format == "json") {
    nlohmann::json doc = to_json(coeffs, constants);
    if (method == szego::Method::SpecialCase && o.alpha == 1.5) {
      // The digamma form of the alpha = 3/2 coefficients disagrees with
      // quadrature; report it next to the adopted finite-sum form.
      nlohmann::json checks = nlohmann::json::array();
      for (std::size_t k = 1; k <= std::min<std::size_t>(o.kmax, 3); ++k) {
        const auto d = szego::holtsmark_digamma_discrepancy(k);
        checks.push_back({{"k", k},
                          {"digamma_line", d.digamma_line},
                          {"first_line", d.first_line},
                          {"quadrature", d.quadrature},
                          {"deviation", d.deviation}});
      }
      doc["digamma_line_check"] = {{"adopted", false}, {"rows", std::move(checks)}};
    }
    a.body = dump_json(doc);
  } else {
    std::ostringstream csv;
    csv << "k,coeff\n";
    for (std::size_t k = 0; k <= coeffs.kmax(); ++k) {
      csv << k << ',' << format_double(coeffs.coeff(k)) << '\n';
    }
    a.body = csv.str();
  }
  a.summary = "szego: alpha=" + format_double(o.alpha) + " method=" +
              std::string(szego::to_string(method)) + " logG=" + format_double(constants.log_g) +
              " logE_partial(m=" + std::to_string(m) + ")=" +
              format_double(constants.log_e_partial);
  return a;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--n-list: '" + item + "' is not an integer");
    }
    if (used != item.size() || value < 1) {
      throw UsageError("--n-list: '" + item + "' is not a positive integer");
    }
    out.push_back(static_cast<std::size_t>(value));
  }
  if (out.empty()) throw UsageError("--n-list must not be empty");
  return out;
}

Artifact cmd_asymptote(const Options& o) {
  if (o.beta != 0.0) throw UsageError("asymptote requires --beta 0");
  const auto n_list = parse_n_list(o.n_list);
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw UsageError("--n-list must be strictly ascending");
  }
  const auto rows = szego::asymptote_study(o.alpha, n_list);
  Artifact a;
  if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : rows) {
      list.push_back({{"n", r.n},
                      {"log_det", r.log_det},
                      {"n_c0", r.n_c0},
                      {"residual", r.residual},
                      {"diag", r.diag}});
    }
    a.body = dump_json({{"schema", kJsonSchema},
                        {"alpha", o.alpha},
                        {"c0", szego::logf_coeff0_closed(o.alpha)},
                        {"rows", std::move(list)}});
  } else {
    std::ostringstream csv;
    szego::write_asymptote_csv(csv, rows);
    a.body = csv.str();
  }
  const auto& last = rows.back();
  a.summary = "asymptote: alpha=" + format_double(o.alpha) + " n=" + std::to_string(last.n) +
              " residual=" + format_double(last.residual) + " diag=" + format_double(last.diag);
  return a;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("-o,--output", o.output, "Output file (default: standard output)");
}

void add_alpha(CLI::App* sub, Options& o) {
  sub->add_option("--alpha", o.alpha, "Stability exponent alpha in (1, 2]")
      ->required()
      ->check(kAlphaRange);
}

void add_grid(CLI::App* sub, Options& o, bool n_required) {
  auto* n = sub->add_option("--n", o.n, "Number of interior grid points");
  if (n_required) n->required();
  sub->add_option("--beta", o.beta, "Skewness beta in [-1, 1]")
      ->check(CLI::Range(-1.0, 1.0))
      ->capture_default_str();
  sub->add_option("--K", o.k_alpha, "Diffusion constant K_alpha > 0")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--L", o.length, "Interval length (default n + 1, i.e. unit spacing)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discretized fractional Schroedinger operator: Toeplitz assembly, spectra and "
               "determinant asymptotics",
               "fracspec"};
  app.require_subcommand(1);
  app.footer(std::string("Environment: ") + kToleranceEnv +
             " overrides the quadrature tolerance (absolute and relative, default 1e-12).");

  std::map<const CLI::App*, std::function<Artifact(const Options&)>> handlers;

  auto* weights = app.add_subcommand("weights", "Grunwald-Letnikov weights w_0..w_count");
  add_alpha(weights, o);
  weights->add_option("--count", o.count, "Largest weight index")->required();
  add_common(weights, o);
  handlers[weights] = cmd_weights;

  auto* matrix = app.add_subcommand("matrix", "Dense Toeplitz matrix of the operator");
  add_alpha(matrix, o);
  add_grid(matrix, o, true);
  matrix->add_flag("--physical", o.physical, "Multiply by K_alpha/(|cos(pi alpha/2)| eps^alpha)");
  add_common(matrix, o);
  handlers[matrix] = cmd_matrix;

  auto* spectrum = app.add_subcommand("spectrum", "Spectral report (eigenvalues for beta = 0)");
  add_alpha(spectrum, o);
  add_grid(spectrum, o, true);
  add_common(spectrum, o);
  handlers[spectrum] = cmd_spectrum;

  auto* symbol = app.add_subcommand("symbol", "Symbol curve samples theta,u,v");
  add_alpha(symbol, o);
  add_grid(symbol, o, false);
  symbol->add_option("--points", o.points, "Number of samples on the circle")->capture_default_str();
  symbol->add_option("--terms", o.terms, "Evaluate the truncated series with this many terms");
  symbol->add_flag("--shifted", o.shifted, "Use the origin-shifted |2cos(theta/2)| form");
  symbol->add_flag("--physical", o.physical, "Multiply u, v by the physical prefactor");
  add_common(symbol, o);
  handlers[symbol] = cmd_symbol;

  auto* szego_cmd = app.add_subcommand("szego", "Fourier coefficients of log f and Szego constants");
  add_alpha(szego_cmd, o);
  szego_cmd->add_option("--kmax", o.kmax, "Largest coefficient index")->capture_default_str();
  szego_cmd->add_option("--m", o.m, "Cutoff of the partial E(f) sum (default kmax)");
  szego_cmd->add_option("--method", o.method, "Coefficient method")
      ->check(CLI::IsMember({"quadrature", "closed", "special-case"}))
      ->capture_default_str();
  szego_cmd->add_option("--scale", o.scale, "Physical prefactor entering c0 as log(scale)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  szego_cmd->add_flag("--unshifted", o.unshifted,
                      "Coefficients of the |2sin(theta/2)| symbol (default: shifted)");
  add_common(szego_cmd, o);
  handlers[szego_cmd] = cmd_szego;

  auto* asymptote = app.add_subcommand("asymptote", "log det M_n against n (log f)_0");
  add_alpha(asymptote, o);
  asymptote->add_option("--n-list", o.n_list, "Comma-separated ascending sizes")
      ->capture_default_str();
  asymptote->add_option("--beta", o.beta, "Must be 0")->capture_default_str();
  add_common(asymptote, o);
  handlers[asymptote] = cmd_asymptote;

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  Artifact artifact;
  try {
    artifact = handlers.at(chosen)(o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }

  if (o.output.empty()) {
    out << artifact.body;
    err << artifact.summary << '\n';
    return kSuccess;
  }
  std::ofstream file(o.output, std::ios::binary);
  file << artifact.body;
  if (!file) {
    err << "numerical failure: cannot write " << o.output << '\n';
    return kNumericalFailure;
  }
  out << artifact.summary << " -> " << o.output << '\n';
  return kSuccess;
}

}  // namespace fracspec::cli
