#include "factored_info/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace factored_info {

namespace {
constexpr double kFloatSumTolerance = 1e-12;
}

Distribution::Distribution(StateSpace space, bool exact, RationalVector rw,
                           std::vector<double> fw)
    : space_(std::move(space)),
      exact_(exact),
      rational_weights_(std::move(rw)),
      float_weights_(std::move(fw)) {}

Distribution Distribution::exact(StateSpace space, RationalVector weights) {
  if (weights.size() != space.total_states()) {
    throw std::invalid_argument("weight vector must cover every joint state");
  }
  Rational sum = 0;
  for (const Rational& w : weights) {
    if (w < 0) {
      throw std::invalid_argument("weights must be nonnegative");
    }
    sum += w;
  }
  if (sum != 1) {
    throw std::invalid_argument("exact weights must sum to exactly 1");
  }
  return Distribution(std::move(space), true, std::move(weights), {});
}

Distribution Distribution::floating(StateSpace space,
                                    std::vector<double> weights) {
  if (weights.size() != space.total_states()) {
    throw std::invalid_argument("weight vector must cover every joint state");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("weights must be nonnegative and finite");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kFloatSumTolerance) {
    throw std::invalid_argument(
        "float weights must sum to 1 within 1e-12; refusing to renormalize");
  }
  return Distribution(std::move(space), false, {}, std::move(weights));
}

Distribution Distribution::point_mass(StateSpace space,
                                      std::size_t state_index) {
  return uniform_over(std::move(space), {state_index});
}

Distribution Distribution::uniform(StateSpace space) {
  std::vector<std::size_t> all(space.total_states());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return uniform_over(std::move(space), all);
}

Distribution Distribution::uniform_over(StateSpace space,
                                        const std::vector<std::size_t>& states) {
  if (states.empty()) {
    throw std::invalid_argument("support must be nonempty");
  }
  RationalVector weights(space.total_states(), Rational(0));
  const Rational share(1, static_cast<unsigned long>(states.size()));
  for (std::size_t s : states) {
    if (s >= space.total_states()) {
      throw std::out_of_range("support state out of range");
    }
    if (weights[s] != 0) {
      throw std::invalid_argument("support states must be distinct");
    }
    weights[s] = share;
  }
  return Distribution(std::move(space), true, std::move(weights), {});
}

double Distribution::weight(std::size_t state_index) const {
  if (exact_) return to_double(rational_weights_.at(state_index));
  return float_weights_.at(state_index);
}

std::vector<double> Distribution::weights_as_double() const {
  if (!exact_) return float_weights_;
  std::vector<double> out(rational_weights_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = to_double(rational_weights_[i]);
  }
  return out;
}

const Rational& Distribution::exact_weight(std::size_t state_index) const {
  return exact_weights().at(state_index);
}

const RationalVector& Distribution::exact_weights() const {
  if (!exact_) {
    throw std::logic_error("float-mode distribution has no exact weights");
  }
  return rational_weights_;
}

Distribution Distribution::to_float() const {
  if (!exact_) return *this;
  return Distribution(space_, false, {}, weights_as_double());
}

std::vector<std::size_t> Distribution::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < space_.total_states(); ++i) {
    const bool nonzero = exact_ ? (rational_weights_[i] != 0)
                                : (float_weights_[i] != 0.0);
    if (nonzero) out.push_back(i);
  }
  return out;
}

bool Distribution::operator==(const Distribution& other) const {
  return space_ == other.space_ && exact_ == other.exact_ &&
         rational_weights_ == other.rational_weights_ &&
         float_weights_ == other.float_weights_;
}

}  // namespace factored_info
