#include "factored_info/family.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "factored_info/oplog.hpp"

namespace factored_info {

MarginFamily::MarginFamily(int n, std::vector<std::vector<int>> sets)
    : n_(n), sets_(std::move(sets)) {
  if (n_ < 1) {
    throw std::invalid_argument("margin family needs n >= 1");
  }
  for (auto& set : sets_) {
    if (set.empty()) {
      throw std::invalid_argument("margin sets must be nonempty");
    }
    std::sort(set.begin(), set.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 0 || set[i] >= n_) {
        throw std::invalid_argument("margin set index out of range");
      }
      if (i > 0 && set[i] == set[i - 1]) {
        throw std::invalid_argument("margin sets may not repeat an index");
      }
    }
  }
  std::sort(sets_.begin(), sets_.end());
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end()) {
    throw std::invalid_argument("duplicate sets in margin family");
  }
}

MarginFamily MarginFamily::all_pairs(int n) {
  std::vector<std::vector<int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  return MarginFamily(n, std::move(pairs));
}

MarginFamily MarginFamily::full_set(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return MarginFamily(n, {all});
}

Pairing::Pairing(std::vector<int> match) : match_(std::move(match)) {
  if (match_.empty()) {
    throw std::invalid_argument("pairing needs at least one pair");
  }
  std::vector<bool> seen(match_.size(), false);
  for (int v : match_) {
    if (v < 0 || v >= static_cast<int>(match_.size()) ||
        seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("pairing must be a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Pairing Pairing::identity(int n) {
  std::vector<int> match(static_cast<std::size_t>(n));
  std::iota(match.begin(), match.end(), 0);
  return Pairing(std::move(match));
}

MarginFamily Pairing::as_family() const {
  const int n = pair_count();
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < n; ++i) {
    sets.push_back({i, n + image(i)});
  }
  return MarginFamily(2 * n, std::move(sets));
}

double i_lambda(const Distribution& p, const MarginFamily& family) {
  oplog::note("family_measures.i_lambda");
  if (family.size() == 0) {
    throw std::invalid_argument("i_lambda needs a nonempty family");
  }
  if (family.variable_count() != p.space().variable_count()) {
    throw std::invalid_argument("family does not match the state space");
  }
  double sum = 0.0;
  for (const auto& set : family.sets()) {
    if (set.size() < 2) continue;  // I of a single variable is 0
    sum += multi_information(marginal(p, set));
  }
  return sum / static_cast<double>(family.size());
}

double fmi(const Distribution& p) {
  oplog::note("family_measures.fmi");
  const int n = p.space().variable_count();
  if (n < 2) {
    throw std::invalid_argument("FMI needs at least two variables");
  }
  return i_lambda(p, MarginFamily::all_pairs(n));
}

double sfmi(const Distribution& p, const Pairing& pairing) {
  oplog::note("family_measures.sfmi");
  const int total = p.space().variable_count();
  if (total % 2 != 0 || total / 2 != pairing.pair_count()) {
    throw std::invalid_argument("SFMI needs a 2n-variable space matching "
                                "the pairing");
  }
  if (!p.space().is_homogeneous()) {
    throw std::invalid_argument("SFMI requires homogeneous cardinalities");
  }
  return i_lambda(p, pairing.as_family());
}

CoveringCertificate is_connected_covering(const MarginFamily& family) {
  oplog::note("family_measures.is_connected_covering");
  CoveringCertificate cert;
  const int n = family.variable_count();
  const auto& sets = family.sets();

  std::vector<bool> covered(static_cast<std::size_t>(n), false);
  for (const auto& set : sets) {
    for (int v : set) covered[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < n; ++v) {
    if (!covered[static_cast<std::size_t>(v)]) {
      cert.uncovered_index = v;
      return cert;
    }
  }

  // Greedy accretion from the first set; any valid witness order suffices.
  const std::size_t count = sets.size();
  std::vector<bool> placed(count, false);
  std::vector<bool> in_union(static_cast<std::size_t>(n), false);
  std::vector<int> order;
  auto intersects_union = [&](const std::vector<int>& set) {
    for (int v : set) {
      if (in_union[static_cast<std::size_t>(v)]) return true;
    }
    return false;
  };
  auto place = [&](std::size_t i) {
    placed[i] = true;
    order.push_back(static_cast<int>(i));
    for (int v : sets[i]) in_union[static_cast<std::size_t>(v)] = true;
  };
  place(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (!placed[i] && intersects_union(sets[i])) {
        place(i);
        grew = true;
      }
    }
  }
  if (order.size() == count) {
    cert.connected_covering = true;
    cert.witness_order = std::move(order);
    return cert;
  }

  // Disconnected: group sets by the component of the variables they touch.
  std::vector<int> component_of(count, -1);
  int components = 0;
  for (std::size_t seed = 0; seed < count; ++seed) {
    if (component_of[seed] != -1) continue;
    const int label = components++;
    std::vector<bool> vars(static_cast<std::size_t>(n), false);
    component_of[seed] = label;
    for (int v : sets[seed]) vars[static_cast<std::size_t>(v)] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < count; ++i) {
        if (component_of[i] != -1) continue;
        bool touches = false;
        for (int v : sets[i]) {
          if (vars[static_cast<std::size_t>(v)]) touches = true;
        }
        if (touches) {
          component_of[i] = label;
          for (int v : sets[i]) vars[static_cast<std::size_t>(v)] = true;
          changed = true;
        }
      }
    }
  }
  cert.components.assign(static_cast<std::size_t>(components), {});
  for (std::size_t i = 0; i < count; ++i) {
    cert.components[static_cast<std::size_t>(component_of[i])].push_back(
        static_cast<int>(i));
  }
  return cert;
}

std::vector<std::vector<int>> margin_statistics_matrix(
    const MarginFamily& family, const StateSpace& space) {
  oplog::note("family_measures.margin_statistics_matrix");
  if (family.variable_count() != space.variable_count()) {
    throw std::invalid_argument("family does not match the state space");
  }
  std::vector<std::vector<int>> rows;
  const std::size_t columns = space.total_states();
  for (const auto& set : family.sets()) {
    const StateSpace sub = space.subspace(set);
    std::vector<std::vector<int>> block(
        sub.total_states(), std::vector<int>(columns, 0));
    std::vector<int> restricted(set.size());
    for (std::size_t x = 0; x < columns; ++x) {
      const std::vector<int> state = space.state_of(x);
      for (std::size_t k = 0; k < set.size(); ++k) {
        restricted[k] = state[static_cast<std::size_t>(set[k])];
      }
      block[sub.index_of(restricted)][x] = 1;
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  return rows;
}

std::int64_t marginal_polytope_dimension(int n, int N, int q) {
  oplog::note("family_measures.marginal_polytope_dimension");
  if (n < 1 || N < 2 || q < 1 || q > n) {
    throw std::invalid_argument(
        "marginal polytope dimension needs 1 <= q <= n and N >= 2");
  }
  std::int64_t total = 0;
  for (int i = 1; i <= q; ++i) {
    std::int64_t binom = 1;
    for (int k = 1; k <= i; ++k) {
      binom = binom * (n - k + 1) / k;
    }
    std::int64_t power = 1;
    for (int k = 0; k < i; ++k) power *= (N - 1);
    total += binom * power;
  }
  return total;
}

}  // namespace factored_info
