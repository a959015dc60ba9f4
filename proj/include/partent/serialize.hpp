#pragma once

#include <filesystem>
#include <json.hpp>

#include "partent/entropy.hpp"
#include "partent/optimize.hpp"
#include "partent/state.hpp"

namespace partent {

// {"n": N, "terms": [{"basis": "010", "re": x, "im": y}, ...]} with the
// nonzero normalized amplitudes in ascending basis order.
nlohmann::json state_to_json(const PureState& state);

// Accepts the same layout; "im" defaults to 0. The result is renormalized.
// Throws ParseError on malformed documents.
PureState state_from_json(const nlohmann::json& doc);

PureState read_state_file(const std::filesystem::path& path);

// {"n", "entropies": [{"kept": "1,3", "S": s}], "eta", "verdict", "partition"}
nlohmann::json report_to_json(const Classification& classification);

nlohmann::json optimization_to_json(const OptimizationResult& result);

}  // namespace partent
