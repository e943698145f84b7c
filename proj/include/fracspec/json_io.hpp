#pragma once

#include "json.hpp"

#include "fracspec/glweights.hpp"
#include "fracspec/spectra.hpp"
#include "fracspec/szego.hpp"
#include "fracspec/toeplitz.hpp"

namespace fracspec {

/// Version stamped into every JSON artifact as the top-level "schema" field.
inline constexpr int kJsonSchema = 1;

nlohmann::json to_json(const glweights::WeightSequence& seq);
nlohmann::json to_json(const toeplitz::ToeplitzOperator& op, bool physical);
nlohmann::json to_json(const spectra::SpectralReport& report);
nlohmann::json to_json(const szego::SzegoCoefficients& coeffs,
                       const szego::SzegoConstants& constants);

/// Throws ConvergenceError if any number in the document is NaN or infinite.
void require_finite(const nlohmann::json& doc);

}  // namespace fracspec
