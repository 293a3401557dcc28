#include "factored_info/oplog.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace factored_info::oplog {

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::set<std::string>& recorded() {
  static std::set<std::string> r;
  return r;
}

}  // namespace

void note(std::string_view op_name) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  recorded().emplace(op_name);
}

const std::vector<std::string>& expected_ops() {
  static const std::vector<std::string> ops = {
      "core_dist.entropy",
      "core_dist.kl_divergence",
      "core_dist.marginal",
      "core_dist.product_of_marginals",
      "core_dist.multi_information",
      "core_dist.block_mutual_information",
      "core_dist.conditional_entropy",
      "family_measures.i_lambda",
      "family_measures.fmi",
      "family_measures.sfmi",
      "family_measures.is_connected_covering",
      "family_measures.margin_statistics_matrix",
      "family_measures.marginal_polytope_dimension",
      "codes.hamming_distance",
      "codes.enumerate_max_distance_codes",
      "codes.partition_into_codes",
      "codes.enumerate_all_partitions",
      "codes.bipartite_matchings_partition",
      "exact_polytope.rational_rank_and_kernel",
      "exact_polytope.enumerate_vertices",
      "exact_polytope.margin_specified_polytope",
      "maximizer_atlas.enumerate_I_maximizers",
      "maximizer_atlas.enumerate_blockMI_maximizers",
      "maximizer_atlas.is_I_maximizer",
      "maximizer_atlas.build_sfmi_polytope",
      "maximizer_atlas.enumerate_sfmi_polytopes",
      "maximizer_atlas.centroid_is_blockMI_maximizer",
      "numeric_search.multi_information_gradient",
      "numeric_search.maximize_measure",
      "numeric_search.verify_theorem_fmi",
  };
  return ops;
}

std::vector<std::string> missing_ops() {
  std::lock_guard<std::mutex> lock(registry_mutex());
  std::vector<std::string> missing;
  for (const std::string& op : expected_ops()) {
    if (!recorded().count(op)) missing.push_back(op);
  }
  return missing;
}

void reset() {
  std::lock_guard<std::mutex> lock(registry_mutex());
  recorded().clear();
}

}  // namespace factored_info::oplog
