#include "fracspec/json_io.hpp"

#include <cmath>

#include "fracspec/errors.hpp"

namespace fracspec {

using nlohmann::json;

json to_json(const glweights::WeightSequence& seq) {
  return {{"schema", kJsonSchema}, {"alpha", seq.alpha}, {"weights", seq.values}};
}

json to_json(const toeplitz::ToeplitzOperator& op, bool physical) {
  const DenseMatrix m = physical ? op.physical_dense() : op.dense();
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto r = m.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  const auto& p = op.params();
  return {{"schema", kJsonSchema},
          {"alpha", p.alpha()},
          {"beta", p.beta()},
          {"n", op.n()},
          {"epsilon", p.epsilon()},
          {"scale", op.scale()},
          {"physical", physical},
          {"kernel", std::vector<double>(op.kernel().begin(), op.kernel().end())},
          {"matrix", std::move(rows)}};
}

json to_json(const spectra::SpectralReport& r) {
  json doc = {{"schema", kJsonSchema},
              {"n", r.n},
              {"alpha", r.alpha},
              {"beta", r.beta},
              {"mean", r.mean},
              {"log_det", r.log_det},
              {"det_sign", r.det_sign}};
  const double det = r.det_sign * std::exp(r.log_det);
  doc["det"] = std::isfinite(det) ? json(det) : json(nullptr);
  if (!r.has_eigenvalues) {
    doc["eigenvalues"] = nullptr;
    return doc;
  }
  json parity = json::array();
  json trench = json::array();
  for (std::size_t i = 0; i < r.parity_labels.size(); ++i) {
    parity.push_back(spectra::to_string(r.parity_labels[i]));
    trench.push_back(spectra::to_string(r.trench_parity_labels[i]));
  }
  doc["eigenvalues"] = r.eigenvalues;
  doc["min_gap"] = r.n > 1 ? json(r.min_gap) : json(nullptr);
  doc["parity_labels"] = std::move(parity);
  doc["trench_parity_labels"] = std::move(trench);
  doc["max_parity_residual"] = r.max_parity_residual;
  doc["alternating"] = r.alternating;
  doc["interlaced"] = r.interlaced;
  doc["in_range"] = r.in_range;
  doc["degenerate"] = r.degenerate;
  return doc;
}

json to_json(const szego::SzegoCoefficients& c, const szego::SzegoConstants& k) {
  return {{"schema", kJsonSchema},
          {"alpha", c.alpha},
          {"scale", c.scale},
          {"method", szego::to_string(c.method)},
          {"shifted", c.shifted},
          {"c0", c.c0},
          {"ck", c.ck},
          {"logG", k.log_g},
          {"logE_partial", {{"m", k.m}, {"value", k.log_e_partial}}}};
}

void require_finite(const json& doc) {
  if (doc.is_number_float() && !std::isfinite(doc.get<double>())) {
    throw ConvergenceError("non-finite number in JSON output");
  }
  if (doc.is_structured()) {
    for (const auto& item : doc) require_finite(item);
  }
}

}  // namespace fracspec
