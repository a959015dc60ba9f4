#include "partent/serialize.hpp"

#include <fstream>

#include "partent/errors.hpp"

namespace partent {

nlohmann::json state_to_json(const PureState& state) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : state.terms()) {
    terms.push_back({{"basis", t.bitstring}, {"re", t.amplitude.real()}, {"im", t.amplitude.imag()}});
  }
  return {{"n", state.n_particles()}, {"terms", std::move(terms)}};
}

PureState state_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("state document must be a JSON object");
    if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
      throw ParseError("state document needs an integer \"n\"");
    }
    if (!doc.contains("terms") || !doc.at("terms").is_array()) {
      throw ParseError("state document needs a \"terms\" array");
    }
    const int n = doc.at("n").get<int>();
    std::vector<BasisTerm> terms;
    for (const auto& t : doc.at("terms")) {
      if (!t.is_object() || !t.contains("basis") || !t.at("basis").is_string() ||
          !t.contains("re") || !t.at("re").is_number()) {
        throw ParseError("each term needs a string \"basis\" and a numeric \"re\"");
      }
      double im = 0.0;
      if (t.contains("im")) {
        if (!t.at("im").is_number()) throw ParseError("\"im\" must be numeric");
        im = t.at("im").get<double>();
      }
      terms.push_back({t.at("basis").get<std::string>(), {t.at("re").get<double>(), im}});
    }
    return build_state(terms, n);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed state document: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("malformed state document: ") + e.what());
  } catch (const EmptyState& e) {
    throw ParseError(std::string("malformed state document: ") + e.what());
  }
}

PureState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return state_from_json(doc);
}

nlohmann::json report_to_json(const Classification& classification) {
  const auto& report = classification.report;
  nlohmann::json entropies = nlohmann::json::array();
  for (const auto& e : report.entries()) {
    entropies.push_back({{"kept", e.kept.label()}, {"S", e.entropy}});
  }
  return {{"n", report.n_particles()},
          {"entropies", std::move(entropies)},
          {"eta", classification.eta},
          {"verdict", to_string(classification.verdict)},
          {"partition", classification.partition}};
}

nlohmann::json optimization_to_json(const OptimizationResult& result) {
  nlohmann::json history = nlohmann::json::array();
  for (const auto& h : result.history) {
    history.push_back({{"restart", h.restart}, {"iteration", h.iteration}, {"eta", h.eta}});
  }
  return {{"best_eta", result.best_eta},
          {"best_state", state_to_json(result.best_state)},
          {"restarts_used", result.restarts_used},
          {"converged", result.converged},
          {"history", std::move(history)}};
}

}  // namespace partent
