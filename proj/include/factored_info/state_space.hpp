#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace factored_info {

// Joint state space of n finite-valued variables. States are tuples
// (x_1,...,x_n) with x_i in {0,...,cardinality(i)-1}, identified with flat
// indices 0..total_states()-1 by row-major mixed-radix encoding: the first
// variable is the most significant digit, so for binary variables the tuple
// (0,1,0,1) is state index 5 and prints as "0101".
class StateSpace {
 public:
  explicit StateSpace(std::vector<int> cardinalities);

  // n variables, all N-ary.
  static StateSpace homogeneous(int n, int cardinality);

  int variable_count() const { return static_cast<int>(cards_.size()); }
  int cardinality(int variable) const;
  const std::vector<int>& cardinalities() const { return cards_; }
  std::size_t total_states() const { return total_; }

  // True when every variable has the same cardinality.
  bool is_homogeneous() const;

  std::size_t index_of(std::span<const int> state) const;
  std::vector<int> state_of(std::size_t index) const;

  // Digit string like "0101"; uses one character per variable, so it is
  // only offered for cardinalities up to 10.
  std::string state_label(std::size_t index) const;

  // Sub-space spanned by the given (sorted, distinct) variable indices.
  StateSpace subspace(std::span<const int> variables) const;

  bool operator==(const StateSpace& other) const = default;

 private:
  std::vector<int> cards_;
  std::size_t total_ = 1;
};

}  // namespace factored_info
