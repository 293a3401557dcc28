#include "factored_info/state_space.hpp"

#include <limits>
#include <stdexcept>

namespace factored_info {

StateSpace::StateSpace(std::vector<int> cardinalities)
    : cards_(std::move(cardinalities)) {
  if (cards_.empty()) {
    throw std::invalid_argument("StateSpace needs at least one variable");
  }
  for (int c : cards_) {
    if (c < 1) {
      throw std::invalid_argument("cardinalities must be >= 1");
    }
    if (total_ > std::numeric_limits<std::size_t>::max() /
                     static_cast<std::size_t>(c)) {
      throw std::invalid_argument("state space too large");
    }
    total_ *= static_cast<std::size_t>(c);
  }
}

StateSpace StateSpace::homogeneous(int n, int cardinality) {
  if (n < 1) {
    throw std::invalid_argument("variable count must be >= 1");
  }
  return StateSpace(std::vector<int>(static_cast<std::size_t>(n), cardinality));
}

int StateSpace::cardinality(int variable) const {
  if (variable < 0 || variable >= variable_count()) {
    throw std::out_of_range("variable index out of range");
  }
  return cards_[static_cast<std::size_t>(variable)];
}

bool StateSpace::is_homogeneous() const {
  for (int c : cards_) {
    if (c != cards_.front()) return false;
  }
  return true;
}

std::size_t StateSpace::index_of(std::span<const int> state) const {
  if (state.size() != cards_.size()) {
    throw std::invalid_argument("state tuple has wrong arity");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < cards_.size(); ++i) {
    if (state[i] < 0 || state[i] >= cards_[i]) {
      throw std::out_of_range("state digit out of range");
    }
    index = index * static_cast<std::size_t>(cards_[i]) +
            static_cast<std::size_t>(state[i]);
  }
  return index;
}

std::vector<int> StateSpace::state_of(std::size_t index) const {
  if (index >= total_) {
    throw std::out_of_range("state index out of range");
  }
  std::vector<int> state(cards_.size());
  for (std::size_t i = cards_.size(); i-- > 0;) {
    const auto c = static_cast<std::size_t>(cards_[i]);
    state[i] = static_cast<int>(index % c);
    index /= c;
  }
  return state;
}

std::string StateSpace::state_label(std::size_t index) const {
  for (int c : cards_) {
    if (c > 10) {
      throw std::invalid_argument("digit labels need cardinalities <= 10");
    }
  }
  std::string label;
  for (int digit : state_of(index)) {
    label += static_cast<char>('0' + digit);
  }
  return label;
}

StateSpace StateSpace::subspace(std::span<const int> variables) const {
  if (variables.empty()) {
    throw std::invalid_argument("subspace needs at least one variable");
  }
  std::vector<int> cards;
  cards.reserve(variables.size());
  int previous = -1;
  for (int v : variables) {
    if (v <= previous) {
      throw std::invalid_argument("subspace variables must be ascending");
    }
    cards.push_back(cardinality(v));
    previous = v;
  }
  return StateSpace(std::move(cards));
}

}  // namespace factored_info
