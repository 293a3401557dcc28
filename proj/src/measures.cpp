#include "factored_info/measures.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "factored_info/oplog.hpp"

namespace factored_info {

namespace {

// Sorted, duplicate-free copy of a variable index list, range-checked.
std::vector<int> canonical_variables(std::vector<int> vars, int n,
                                     const char* what) {
  std::sort(vars.begin(), vars.end());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] < 0 || vars[i] >= n) {
      throw std::invalid_argument(std::string(what) +
                                  ": variable index out of range");
    }
    if (i > 0 && vars[i] == vars[i - 1]) {
      throw std::invalid_argument(std::string(what) +
                                  ": duplicate variable index");
    }
  }
  return vars;
}

double entropy_of_weights(const std::vector<double>& w) {
  double h = 0.0;
  for (double x : w) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

}  // namespace

BlockSplit BlockSplit::halves(int total_variables) {
  if (total_variables < 2 || total_variables % 2 != 0) {
    throw std::invalid_argument("halves split needs an even variable count");
  }
  BlockSplit split;
  for (int i = 0; i < total_variables / 2; ++i) split.x_block.push_back(i);
  for (int i = total_variables / 2; i < total_variables; ++i) {
    split.y_block.push_back(i);
  }
  return split;
}

double entropy(const Distribution& p) {
  oplog::note("core_dist.entropy");
  return entropy_of_weights(p.weights_as_double());
}

double kl_divergence(const Distribution& p, const Distribution& q) {
  oplog::note("core_dist.kl_divergence");
  if (p.space() != q.space()) {
    throw std::invalid_argument("KL divergence needs a common state space");
  }
  double sum = 0.0;
  for (std::size_t x = 0; x < p.space().total_states(); ++x) {
    const bool p_zero = p.is_exact() ? (p.exact_weight(x) == 0)
                                     : (p.weight(x) == 0.0);
    if (p_zero) continue;
    const bool q_zero = q.is_exact() ? (q.exact_weight(x) == 0)
                                     : (q.weight(x) == 0.0);
    if (q_zero) {
      return std::numeric_limits<double>::infinity();
    }
    const double pw = p.weight(x);
    sum += pw * std::log(pw / q.weight(x));
  }
  return sum;
}

Distribution marginal(const Distribution& p, std::vector<int> variables) {
  oplog::note("core_dist.marginal");
  if (variables.empty()) {
    throw std::invalid_argument("marginal onto an empty variable set");
  }
  const int n = p.space().variable_count();
  variables = canonical_variables(std::move(variables), n, "marginal");
  const StateSpace sub = p.space().subspace(variables);

  std::vector<int> restricted(variables.size());
  auto restricted_index = [&](std::size_t joint) {
    const std::vector<int> state = p.space().state_of(joint);
    for (std::size_t k = 0; k < variables.size(); ++k) {
      restricted[k] = state[static_cast<std::size_t>(variables[k])];
    }
    return sub.index_of(restricted);
  };

  if (p.is_exact()) {
    RationalVector weights(sub.total_states(), Rational(0));
    for (std::size_t x = 0; x < p.space().total_states(); ++x) {
      weights[restricted_index(x)] += p.exact_weight(x);
    }
    return Distribution::exact(sub, std::move(weights));
  }
  std::vector<double> weights(sub.total_states(), 0.0);
  for (std::size_t x = 0; x < p.space().total_states(); ++x) {
    weights[restricted_index(x)] += p.weight(x);
  }
  return Distribution::floating(sub, std::move(weights));
}

Distribution product_of_marginals(const Distribution& p) {
  oplog::note("core_dist.product_of_marginals");
  const int n = p.space().variable_count();

  if (p.is_exact()) {
    std::vector<RationalVector> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      factors.push_back(marginal(p, {i}).exact_weights());
    }
    RationalVector weights(p.space().total_states(), Rational(1));
    for (std::size_t x = 0; x < weights.size(); ++x) {
      const std::vector<int> state = p.space().state_of(x);
      for (int i = 0; i < n; ++i) {
        weights[x] *= factors[static_cast<std::size_t>(i)]
                             [static_cast<std::size_t>(state[i])];
      }
    }
    return Distribution::exact(p.space(), std::move(weights));
  }

  // Float mode: normalize each factor so rounding in the input cannot
  // push the product outside the construction tolerance.
  std::vector<std::vector<double>> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<double> f = marginal(p, {i}).weights_as_double();
    double sum = 0.0;
    for (double v : f) sum += v;
    for (double& v : f) v /= sum;
    factors.push_back(std::move(f));
  }
  std::vector<double> weights(p.space().total_states(), 1.0);
  for (std::size_t x = 0; x < weights.size(); ++x) {
    const std::vector<int> state = p.space().state_of(x);
    for (int i = 0; i < n; ++i) {
      weights[x] *= factors[static_cast<std::size_t>(i)]
                           [static_cast<std::size_t>(state[i])];
    }
  }
  return Distribution::floating(p.space(), std::move(weights));
}

double multi_information(const Distribution& p) {
  oplog::note("core_dist.multi_information");
  double marginal_entropy_sum = 0.0;
  for (int i = 0; i < p.space().variable_count(); ++i) {
    marginal_entropy_sum += entropy(marginal(p, {i}));
  }
  const double entropy_form = marginal_entropy_sum - entropy(p);
#ifndef NDEBUG
  const double kl_form = kl_divergence(p, product_of_marginals(p));
  assert(std::abs(kl_form - entropy_form) < 1e-10);
#endif
  return entropy_form;
}

double block_mutual_information(const Distribution& p,
                                const BlockSplit& split) {
  oplog::note("core_dist.block_mutual_information");
  const int n = p.space().variable_count();
  if (split.x_block.empty() || split.y_block.empty()) {
    throw std::invalid_argument("block split needs two nonempty blocks");
  }
  std::vector<int> all = split.x_block;
  all.insert(all.end(), split.y_block.begin(), split.y_block.end());
  all = canonical_variables(std::move(all), n, "block split");
  if (static_cast<int>(all.size()) != n) {
    throw std::invalid_argument("block split must cover every variable");
  }
  return entropy(marginal(p, split.x_block)) +
         entropy(marginal(p, split.y_block)) - entropy(p);
}

double conditional_entropy(const Distribution& p, std::vector<int> target,
                           std::vector<int> given) {
  oplog::note("core_dist.conditional_entropy");
  if (target.empty()) {
    throw std::invalid_argument("conditional entropy needs a target set");
  }
  std::vector<int> joint = target;
  joint.insert(joint.end(), given.begin(), given.end());
  joint = canonical_variables(std::move(joint), p.space().variable_count(),
                              "conditional entropy");
  if (joint.size() != target.size() + given.size()) {
    throw std::invalid_argument(
        "conditional entropy: target and given sets must be disjoint");
  }
  if (given.empty()) {
    return entropy(marginal(p, std::move(target)));
  }
  return entropy(marginal(p, std::move(joint))) -
         entropy(marginal(p, std::move(given)));
}

}  // namespace factored_info
