#pragma once

#include <cstddef>
#include <vector>

#include "factored_info/rational.hpp"
#include "factored_info/state_space.hpp"

namespace factored_info {

// Probability distribution over a StateSpace, dual-backed: either exact
// rational weights or floating-point weights. The backing is fixed at
// construction; converting exact -> float is an explicit operation and the
// reverse is not offered. Instances are immutable.
class Distribution {
 public:
  // Exact mode. Weights must be nonnegative and sum to exactly 1.
  static Distribution exact(StateSpace space, RationalVector weights);

  // Float mode. Weights must be nonnegative and sum to 1 within 1e-12;
  // inputs outside tolerance are rejected, never renormalized.
  static Distribution floating(StateSpace space, std::vector<double> weights);

  // Point measure delta_x (exact).
  static Distribution point_mass(StateSpace space, std::size_t state_index);

  // Uniform distribution over the whole space (exact).
  static Distribution uniform(StateSpace space);

  // Uniform distribution over a set of distinct states (exact).
  static Distribution uniform_over(StateSpace space,
                                   const std::vector<std::size_t>& states);

  bool is_exact() const { return exact_; }
  const StateSpace& space() const { return space_; }

  // Weight of a joint state, as double in either mode.
  double weight(std::size_t state_index) const;
  std::vector<double> weights_as_double() const;

  // Exact weight; only valid in exact mode.
  const Rational& exact_weight(std::size_t state_index) const;
  const RationalVector& exact_weights() const;

  // Explicit conversion to float backing.
  Distribution to_float() const;

  // Indices of states with nonzero weight (exact zero test in exact mode,
  // == 0.0 in float mode), ascending.
  std::vector<std::size_t> support() const;

  // Exact equality. Two distributions compare equal only if they share the
  // state space, the backing mode, and identical weights.
  bool operator==(const Distribution& other) const;

 private:
  Distribution(StateSpace space, bool exact, RationalVector rw,
               std::vector<double> fw);

  StateSpace space_;
  bool exact_;
  RationalVector rational_weights_;
  std::vector<double> float_weights_;
};

}  // namespace factored_info
