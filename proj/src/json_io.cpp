#include "factored_info/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace factored_info {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw std::invalid_argument(field + ": " + why);
}

std::vector<int> int_array(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(field, "expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

// 1-based on the wire, 0-based in memory.
std::vector<int> index_set_from_json(const Json& j, const std::string& field) {
  std::vector<int> out = int_array(j, field);
  for (int& v : out) {
    if (v < 1) fail(field, "indices are 1-based");
    v -= 1;
  }
  return out;
}

Json index_set_to_json(const std::vector<int>& indices) {
  Json out = Json::array();
  for (int v : indices) out.push_back(v + 1);
  return out;
}

Json state_to_json(const StateSpace& space, std::size_t index) {
  Json out = Json::array();
  for (int digit : space.state_of(index)) out.push_back(digit);
  return out;
}

Json rational_vector_entries(const StateSpace& space,
                             const std::vector<std::size_t>& labels,
                             const RationalVector& values) {
  Json entries = Json::array();
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == 0) continue;
    entries.push_back({{"state", state_to_json(space, labels[k])},
                       {"prob", rational_to_string(values[k])}});
  }
  return entries;
}

}  // namespace

Json distribution_to_json(const Distribution& p) {
  Json j;
  j["cardinalities"] = p.space().cardinalities();
  Json entries = Json::array();
  for (std::size_t s : p.support()) {
    Json entry;
    entry["state"] = state_to_json(p.space(), s);
    if (p.is_exact()) {
      entry["prob"] = rational_to_string(p.exact_weight(s));
    } else {
      entry["prob"] = p.weight(s);
    }
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

Distribution distribution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cardinalities") || !j.contains("entries")) {
    fail("distribution", "expected {cardinalities, entries}");
  }
  const StateSpace space(int_array(j["cardinalities"], "cardinalities"));
  if (!j["entries"].is_array()) fail("entries", "expected an array");

  bool any_rational = false;
  bool any_float = false;
  RationalVector rational_weights(space.total_states(), Rational(0));
  std::vector<double> float_weights(space.total_states(), 0.0);

  std::size_t i = 0;
  for (const auto& entry : j["entries"]) {
    const std::string where = "entries[" + std::to_string(i++) + "]";
    if (!entry.is_object() || !entry.contains("state") ||
        !entry.contains("prob")) {
      fail(where, "expected {state, prob}");
    }
    const std::vector<int> state = int_array(entry["state"], where + ".state");
    std::size_t index = 0;
    try {
      index = space.index_of(state);
    } catch (const std::exception& e) {
      fail(where + ".state", e.what());
    }
    const auto& prob = entry["prob"];
    if (prob.is_string()) {
      any_rational = true;
      rational_weights[index] += rational_from_string(prob.get<std::string>());
    } else if (prob.is_number()) {
      any_float = true;
      float_weights[index] += prob.get<double>();
    } else {
      fail(where + ".prob", "expected a rational string or a number");
    }
    if (any_rational && any_float) {
      fail(where + ".prob", "mixes rational and float probability modes");
    }
  }
  if (any_rational) {
    return Distribution::exact(space, std::move(rational_weights));
  }
  if (any_float) {
    return Distribution::floating(space, std::move(float_weights));
  }
  fail("entries", "distribution has no entries");
}

Json family_to_json(const MarginFamily& family) {
  Json sets = Json::array();
  for (const auto& set : family.sets()) sets.push_back(index_set_to_json(set));
  return Json{{"n", family.variable_count()}, {"sets", std::move(sets)}};
}

MarginFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("sets")) {
    fail("family", "expected {n, sets}");
  }
  if (!j["n"].is_number_integer()) fail("family.n", "expected an integer");
  if (!j["sets"].is_array()) fail("family.sets", "expected an array of sets");
  std::vector<std::vector<int>> sets;
  std::size_t k = 0;
  for (const auto& set : j["sets"]) {
    sets.push_back(
        index_set_from_json(set, "family.sets[" + std::to_string(k++) + "]"));
  }
  try {
    return MarginFamily(j["n"].get<int>(), std::move(sets));
  } catch (const std::exception& e) {
    fail("family", e.what());
  }
}

Json pairing_to_json(const Pairing& pairing) {
  return Json{{"n", pairing.pair_count()},
              {"match", index_set_to_json(pairing.match())}};
}

Pairing pairing_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("match")) {
    fail("pairing", "expected {n, match}");
  }
  std::vector<int> match = index_set_from_json(j["match"], "pairing.match");
  if (!j["n"].is_number_integer() ||
      j["n"].get<int>() != static_cast<int>(match.size())) {
    fail("pairing.n", "must equal the match length");
  }
  try {
    return Pairing(std::move(match));
  } catch (const std::exception& e) {
    fail("pairing.match", e.what());
  }
}

BlockSplit split_from_json(const Json& j, int total_variables) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y")) {
    fail("split", "expected {x, y}");
  }
  BlockSplit split;
  split.x_block = index_set_from_json(j["x"], "split.x");
  split.y_block = index_set_from_json(j["y"], "split.y");
  for (int v : split.x_block) {
    if (v >= total_variables) fail("split.x", "index out of range");
  }
  for (int v : split.y_block) {
    if (v >= total_variables) fail("split.y", "index out of range");
  }
  return split;
}

SearchConfig search_config_from_json(const Json& j) {
  SearchConfig config;
  if (!j.is_object()) fail("config", "expected an object");
  if (j.contains("restarts")) config.restarts = j["restarts"].get<int>();
  if (j.contains("max_iterations")) {
    config.max_iterations = j["max_iterations"].get<int>();
  }
  if (j.contains("step_size")) config.step_size = j["step_size"].get<double>();
  if (j.contains("convergence_tol")) {
    config.convergence_tol = j["convergence_tol"].get<double>();
  }
  if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
  if (config.restarts < 1 || config.max_iterations < 1 ||
      config.step_size <= 0.0 || config.convergence_tol <= 0.0) {
    fail("config", "all search parameters must be positive");
  }
  return config;
}

Json search_config_to_json(const SearchConfig& config) {
  return Json{{"restarts", config.restarts},
              {"max_iterations", config.max_iterations},
              {"step_size", config.step_size},
              {"convergence_tol", config.convergence_tol},
              {"seed", config.seed}};
}

Json search_result_to_json(const SearchResult& result) {
  Json j;
  j["best_value"] = result.best_value;
  j["best_point"] = distribution_to_json(result.best_point);
  j["max_observed_value"] = result.max_observed_value;
  Json traces = Json::array();
  for (const RestartTrace& t : result.restarts) {
    traces.push_back({{"value", t.value},
                      {"iterations", t.iterations},
                      {"converged", t.converged}});
  }
  j["restarts"] = std::move(traces);
  if (result.matched_maximizer.has_value()) {
    j["matched_maximizer"] = *result.matched_maximizer;
    j["matched_tv_distance"] = result.matched_tv_distance;
  }
  return j;
}

Json covering_certificate_to_json(const CoveringCertificate& cert) {
  Json j;
  j["connected_covering"] = cert.connected_covering;
  if (cert.connected_covering) {
    j["witness_order"] = cert.witness_order;
  } else if (cert.uncovered_index.has_value()) {
    j["uncovered_index"] = *cert.uncovered_index + 1;
  } else {
    j["components"] = cert.components;
  }
  return j;
}

Json margin_polytope_to_json(const MarginSpecifiedPolytope& polytope,
                             const StateSpace& space) {
  Json j;
  Json support = Json::array();
  for (std::size_t s : polytope.support) {
    support.push_back(state_to_json(space, s));
  }
  j["support"] = std::move(support);
  j["rank"] = polytope.report.rank;
  j["affine_dimension"] = polytope.report.affine_dimension;
  j["is_empty"] = polytope.report.is_empty;
  j["is_point"] = polytope.report.is_point;
  Json kernel = Json::array();
  for (const RationalVector& v : polytope.report.kernel_basis) {
    Json entry = Json::array();
    for (const Rational& r : v) entry.push_back(rational_to_string(r));
    kernel.push_back(std::move(entry));
  }
  j["kernel_basis"] = std::move(kernel);
  Json vertices = Json::array();
  for (const RationalVector& v : polytope.report.vertices) {
    vertices.push_back(
        rational_vector_entries(space, polytope.system.column_labels, v));
  }
  j["vertices"] = std::move(vertices);
  return j;
}

Json sfmi_polytope_to_json(const SfmiPolytope& polytope) {
  const StateSpace space =
      StateSpace::homogeneous(2 * polytope.n, polytope.N);
  Json j;
  Json margins = Json::array();
  for (const Code& code : polytope.margin_codes) {
    margins.push_back(code_to_json(code));
  }
  j["margin_codes"] = std::move(margins);
  j["pairing"] = pairing_to_json(polytope.pairing);
  Json support = Json::array();
  for (std::size_t s : polytope.support) {
    support.push_back(space.state_label(s));
  }
  j["support"] = std::move(support);
  j["rank"] = polytope.report.rank;
  j["affine_dimension"] = polytope.report.affine_dimension;
  Json vertices = Json::array();
  for (std::size_t v = 0; v < polytope.report.vertices.size(); ++v) {
    Json vertex;
    vertex["weights"] = rational_vector_entries(
        space, polytope.system.column_labels, polytope.report.vertices[v]);
    vertex["is_code_vertex"] =
        std::find(polytope.code_vertices.begin(), polytope.code_vertices.end(),
                  v) != polytope.code_vertices.end();
    vertices.push_back(std::move(vertex));
  }
  j["vertices"] = std::move(vertices);
  j["simplices"] = polytope.simplices;
  j["centroid"] = distribution_to_json(polytope.centroid);
  return j;
}

Json maximizer_set_to_json(const MaximizerSet& set) {
  Json j;
  j["kind"] = set.kind == MaximizerSet::Kind::multi_information
                  ? "multi_information"
                  : "block_mi";
  j["count"] = set.distributions.size();
  Json members = Json::array();
  for (const Distribution& p : set.distributions) {
    members.push_back(distribution_to_json(p));
  }
  j["distributions"] = std::move(members);
  return j;
}

Json code_to_json(const Code& code) {
  Json words = Json::array();
  for (const Word& w : code.words()) {
    if (code.alphabet() <= 10) {
      std::string digits;
      for (int d : w) digits += static_cast<char>('0' + d);
      words.push_back(std::move(digits));
    } else {
      words.push_back(w);  // digit strings would be ambiguous
    }
  }
  return words;
}

Json partition_to_json(const CodePartition& partition) {
  Json parts = Json::array();
  for (const Code& code : partition.parts) parts.push_back(code_to_json(code));
  return parts;
}

Json theorem_fmi_report_to_json(const TheoremFmiReport& report) {
  Json j;
  j["certificate"] = covering_certificate_to_json(report.certificate);
  j["combinations_tested"] = report.combinations_tested;
  j["feasible_combinations"] = report.feasible_combinations;
  j["point_polytopes"] = report.point_polytopes;
  j["points_matching_maximizer"] = report.points_matching_maximizer;
  j["max_affine_dimension"] = report.max_affine_dimension;
  if (report.witness.has_value()) {
    j["witness"] = distribution_to_json(*report.witness);
    j["witness_i_lambda"] = report.witness_i_lambda;
    j["witness_multi_information"] = report.witness_multi_information;
  }
  j["expected_max"] = report.expected_max;
  j["best_value"] = report.best_value;
  j["converged_to_max"] = report.converged_to_max;
  j["matched_to_maximizer"] = report.matched_to_maximizer;
  j["passed"] = report.passed;
  return j;
}

}  // namespace factored_info
