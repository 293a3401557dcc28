#pragma once

#include <json.hpp>

#include "factored_info/exact_polytope.hpp"
#include "factored_info/maximizer_atlas.hpp"
#include "factored_info/numeric_search.hpp"

// JSON wire formats. Variable indices are 1-based on the wire (families,
// pairings, block splits); state tuples are raw digit arrays. Rational
// probabilities travel as "a/b" strings, float probabilities as numbers;
// a single document must not mix the two modes.
namespace factored_info {

using Json = nlohmann::json;

Json distribution_to_json(const Distribution& p);
Distribution distribution_from_json(const Json& j);

Json family_to_json(const MarginFamily& family);
MarginFamily family_from_json(const Json& j);

Json pairing_to_json(const Pairing& pairing);
Pairing pairing_from_json(const Json& j);

BlockSplit split_from_json(const Json& j, int total_variables);

SearchConfig search_config_from_json(const Json& j);
Json search_config_to_json(const SearchConfig& config);

Json search_result_to_json(const SearchResult& result);

Json covering_certificate_to_json(const CoveringCertificate& cert);

Json margin_polytope_to_json(const MarginSpecifiedPolytope& polytope,
                             const StateSpace& space);

Json sfmi_polytope_to_json(const SfmiPolytope& polytope);

Json maximizer_set_to_json(const MaximizerSet& set);

Json code_to_json(const Code& code);
Json partition_to_json(const CodePartition& partition);

Json theorem_fmi_report_to_json(const TheoremFmiReport& report);

}  // namespace factored_info
