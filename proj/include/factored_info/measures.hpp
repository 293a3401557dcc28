#pragma once

#include <vector>

#include "factored_info/distribution.hpp"

namespace factored_info {

// Partition of the variables of a 2n-variable space into two blocks that
// are treated as composite variables for mutual information.
struct BlockSplit {
  std::vector<int> x_block;  // 0-based variable indices
  std::vector<int> y_block;

  // First n variables vs. last n.
  static BlockSplit halves(int total_variables);
};

// Shannon entropy in nats, with 0 log 0 := 0.
double entropy(const Distribution& p);

// Kullback-Leibler divergence D(p||q) in nats. Returns +infinity when some
// p(x) > 0 has q(x) = 0. Throws if the state spaces differ.
double kl_divergence(const Distribution& p, const Distribution& q);

// Marginal distribution onto the given (nonempty) set of variable indices,
// 0-based, in ascending order. Exactness of the input backing is preserved.
Distribution marginal(const Distribution& p, std::vector<int> variables);

// The product of the one-variable marginals: the closest fully factorized
// distribution to p in KL divergence.
Distribution product_of_marginals(const Distribution& p);

// Multi-information (total correlation): sum_i H(X_i) - H(X_1,...,X_n),
// equal to D(p || product_of_marginals(p)). Debug builds evaluate both
// forms and assert agreement within 1e-10.
double multi_information(const Distribution& p);

// Mutual information of the two composite block variables.
double block_mutual_information(const Distribution& p, const BlockSplit& split);

// H(target | given) = H(target + given) - H(given); given may be empty.
double conditional_entropy(const Distribution& p, std::vector<int> target,
                           std::vector<int> given);

}  // namespace factored_info
