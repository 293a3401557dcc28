#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "factored_info/measures.hpp"

namespace factored_info {

// A family Lambda of variable-index subsets. Each set is stored sorted and
// the family is kept sorted lexicographically, so equality and hashing are
// canonical. Indices are 0-based; JSON I/O converts from the 1-based
// convention used in reports.
class MarginFamily {
 public:
  MarginFamily(int n, std::vector<std::vector<int>> sets);

  // All unordered pairs {i,j}, i < j.
  static MarginFamily all_pairs(int n);

  // The full set {0,...,n-1} as a single margin.
  static MarginFamily full_set(int n);

  int variable_count() const { return n_; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  bool operator==(const MarginFamily& other) const = default;

 private:
  int n_;
  std::vector<std::vector<int>> sets_;
};

// Perfect matching between X-variables and Y-variables of a 2n-variable
// space: X_i is paired with Y_{image(i)}. Stored 0-based.
class Pairing {
 public:
  explicit Pairing(std::vector<int> match);
  static Pairing identity(int n);

  int pair_count() const { return static_cast<int>(match_.size()); }
  int image(int i) const { return match_.at(i); }
  const std::vector<int>& match() const { return match_; }

  // The margin family {{i, n + image(i)}} on 2n variables.
  MarginFamily as_family() const;

  bool operator==(const Pairing& other) const = default;

 private:
  std::vector<int> match_;
};

// Average multi-information over the margins indexed by the family:
// (1/|Lambda|) sum_lambda I(marginal(p, lambda)). Singletons contribute 0.
double i_lambda(const Distribution& p, const MarginFamily& family);

// Average mutual information over all unordered pairs of variables.
double fmi(const Distribution& p);

// Average mutual information over the matched pairs (X_i, Y_{pi(i)}) of a
// 2n-variable space laid out as (x_1..x_n, y_1..y_n). Requires homogeneous
// cardinalities.
double sfmi(const Distribution& p, const Pairing& pairing);

// Result of the connected-covering test. When the family is a connected
// covering, `witness_order` lists set indices in an order where each set
// meets the union of its predecessors. Otherwise either an uncovered
// variable or the connected components (as set-index groups) are reported.
struct CoveringCertificate {
  bool connected_covering = false;
  std::vector<int> witness_order;
  std::optional<int> uncovered_index;
  std::vector<std::vector<int>> components;
};

CoveringCertificate is_connected_covering(const MarginFamily& family);

// 0/1 matrix of margin indicator statistics: one row per (lambda, margin
// state) pair, one column per joint state; entry 1 iff the joint state
// restricts to that margin state. Rows are grouped by family order, margin
// states in mixed-radix order. Row count is sum_lambda |X_lambda|.
std::vector<std::vector<int>> margin_statistics_matrix(
    const MarginFamily& family, const StateSpace& space);

// Dimension of the marginal polytope of all q-th order margins of n N-ary
// variables: sum_{i=1..q} C(n,i) (N-1)^i.
std::int64_t marginal_polytope_dimension(int n, int N, int q);

}  // namespace factored_info
