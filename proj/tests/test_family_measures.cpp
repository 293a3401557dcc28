#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "factored_info/family.hpp"

using namespace factored_info;

namespace {

constexpr double kLog2 = 0.6931471805599453;

Distribution from_labels(const StateSpace& space,
                         const std::vector<std::string>& labels) {
  std::vector<std::size_t> states;
  for (const auto& label : labels) {
    std::vector<int> digits;
    for (char c : label) digits.push_back(c - '0');
    states.push_back(space.index_of(digits));
  }
  return Distribution::uniform_over(space, states);
}

Distribution random_float(const StateSpace& space, std::mt19937& rng) {
  std::uniform_real_distribution<double> pick(0.01, 1.0);
  std::vector<double> w(space.total_states());
  double total = 0.0;
  for (double& v : w) {
    v = pick(rng);
    total += v;
  }
  for (double& v : w) v /= total;
  return Distribution::floating(space, std::move(w));
}

}  // namespace

TEST_CASE("margin family canonicalization") {
  const MarginFamily family(3, {{2, 1}, {0, 1}});
  CHECK(family.sets() == std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(MarginFamily(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(MarginFamily(3, {{}}), std::invalid_argument);
  CHECK_THROWS_AS(MarginFamily(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(MarginFamily(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("pairing validation") {
  CHECK_THROWS_AS(Pairing({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Pairing({1, 2}), std::invalid_argument);
  const Pairing swap({1, 0});
  CHECK(swap.image(0) == 1);
  CHECK(swap.as_family().sets() ==
        std::vector<std::vector<int>>{{0, 3}, {1, 2}});
}

TEST_CASE("i_lambda special cases") {
  const StateSpace triple = StateSpace::homogeneous(3, 2);
  const Distribution diag = from_labels(triple, {"000", "111"});
  CHECK(i_lambda(diag, MarginFamily::full_set(3)) ==
        doctest::Approx(multi_information(diag)).epsilon(1e-14));
  CHECK(i_lambda(diag, MarginFamily(3, {{0}, {1}})) == 0.0);
  CHECK_THROWS_AS(i_lambda(diag, MarginFamily(2, {{0, 1}})),
                  std::invalid_argument);

  // average of two pair MIs, composed from the marginal oracle
  std::mt19937 rng(41);
  for (int round = 0; round < 25; ++round) {
    const Distribution p = random_float(triple, rng);
    const double expected = 0.5 * (multi_information(marginal(p, {0, 1})) +
                                   multi_information(marginal(p, {1, 2})));
    CHECK(i_lambda(p, MarginFamily(3, {{0, 1}, {1, 2}})) ==
          doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("fmi equals the all-pairs family exactly") {
  const StateSpace triple = StateSpace::homogeneous(3, 2);
  std::mt19937 rng(43);
  for (int round = 0; round < 25; ++round) {
    const Distribution p = random_float(triple, rng);
    CHECK(fmi(p) == i_lambda(p, MarginFamily::all_pairs(3)));
  }
  CHECK(std::abs(fmi(from_labels(triple, {"000", "111"})) - kLog2) < 1e-12);
  CHECK(std::abs(fmi(product_of_marginals(random_float(triple, rng)))) <
        1e-12);
  CHECK_THROWS_AS(fmi(Distribution::uniform(StateSpace(std::vector<int>{4}))),
                  std::invalid_argument);

  // every multi-information maximizer attains the FMI maximum log 2
  for (const auto& labels : {std::vector<std::string>{"000", "111"},
                             {"001", "110"},
                             {"010", "101"},
                             {"011", "100"}}) {
    CHECK(std::abs(fmi(from_labels(triple, labels)) - kLog2) < 1e-12);
  }
}

TEST_CASE("sfmi under pairings") {
  const StateSpace space = StateSpace::homogeneous(4, 2);
  const Pairing identity = Pairing::identity(2);

  CHECK(std::abs(sfmi(Distribution::uniform(space), identity)) < 1e-12);
  CHECK(std::abs(sfmi(from_labels(space, {"0000", "1111"}), identity) -
                 kLog2) < 1e-12);
  CHECK(std::abs(sfmi(from_labels(space, {"0000", "0101", "1010", "1111"}),
                      identity) -
                 kLog2) < 1e-12);

  // matching family equivalence, including a swapped pairing
  std::mt19937 rng(47);
  const Pairing swap({1, 0});
  for (int round = 0; round < 25; ++round) {
    const Distribution p = random_float(space, rng);
    CHECK(sfmi(p, identity) == i_lambda(p, identity.as_family()));
    CHECK(sfmi(p, swap) == i_lambda(p, swap.as_family()));
  }

  CHECK_THROWS_AS(
      sfmi(Distribution::uniform(StateSpace::homogeneous(3, 2)), identity),
      std::invalid_argument);
  CHECK_THROWS_AS(
      sfmi(Distribution::uniform(StateSpace({2, 2, 2, 3})), identity),
      std::invalid_argument);
}

TEST_CASE("connected covering classification") {
  const auto chain = is_connected_covering(
      MarginFamily(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(chain.connected_covering);
  CHECK(chain.witness_order.size() == 3);

  const auto split = is_connected_covering(MarginFamily(4, {{0, 1}, {2, 3}}));
  CHECK(!split.connected_covering);
  CHECK(split.components.size() == 2);

  const auto gap = is_connected_covering(MarginFamily(3, {{0, 1}}));
  CHECK(!gap.connected_covering);
  REQUIRE(gap.uncovered_index.has_value());
  CHECK(*gap.uncovered_index == 2);

  CHECK(is_connected_covering(MarginFamily::full_set(5)).connected_covering);
  CHECK(is_connected_covering(MarginFamily::all_pairs(4)).connected_covering);
  // a singleton attached to a covering chain is still a connected covering
  CHECK(is_connected_covering(MarginFamily(2, {{0, 1}, {1}}))
            .connected_covering);
}

TEST_CASE("witness orders replay the definition literally") {
  std::mt19937 rng(53);
  std::uniform_int_distribution<int> set_count(1, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  const int n = 5;
  for (int round = 0; round < 300; ++round) {
    std::vector<std::vector<int>> sets;
    std::set<std::vector<int>> seen;
    const int count = set_count(rng);
    for (int s = 0; s < count; ++s) {
      std::vector<int> set;
      for (int v = 0; v < n; ++v) {
        if (coin(rng)) set.push_back(v);
      }
      if (set.empty()) set.push_back(0);
      if (seen.insert(set).second) sets.push_back(set);
    }
    const MarginFamily family(n, sets);
    const auto cert = is_connected_covering(family);
    if (cert.connected_covering) {
      REQUIRE(cert.witness_order.size() == family.size());
      std::vector<bool> in_union(n, false);
      bool first = true;
      for (int index : cert.witness_order) {
        const auto& set = family.sets()[static_cast<std::size_t>(index)];
        if (!first) {
          bool meets = false;
          for (int v : set) meets = meets || in_union[static_cast<std::size_t>(v)];
          CHECK(meets);
        }
        for (int v : set) in_union[static_cast<std::size_t>(v)] = true;
        first = false;
      }
      CHECK(std::all_of(in_union.begin(), in_union.end(),
                        [](bool b) { return b; }));
    } else if (cert.uncovered_index.has_value()) {
      for (const auto& set : family.sets()) {
        CHECK(std::find(set.begin(), set.end(), *cert.uncovered_index) ==
              set.end());
      }
    } else {
      CHECK(cert.components.size() >= 2);
      // sets in different components share no variable
      for (std::size_t a = 0; a < cert.components.size(); ++a) {
        for (std::size_t b = a + 1; b < cert.components.size(); ++b) {
          for (int i : cert.components[a]) {
            for (int j : cert.components[b]) {
              const auto& si = family.sets()[static_cast<std::size_t>(i)];
              const auto& sj = family.sets()[static_cast<std::size_t>(j)];
              for (int v : si) {
                CHECK(std::find(sj.begin(), sj.end(), v) == sj.end());
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("margin statistics matrix") {
  const StateSpace pair = StateSpace::homogeneous(2, 2);
  const auto stats = margin_statistics_matrix(MarginFamily(2, {{0}, {1}}),
                                              pair);
  const std::vector<std::vector<int>> golden = {
      {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
  CHECK(stats == golden);

  // each (lambda, margin-state) row sums to the complement state count
  const StateSpace space({2, 3, 2});
  const MarginFamily family(3, {{0, 2}, {1}});
  const auto rows = margin_statistics_matrix(family, space);
  REQUIRE(rows.size() == 4 + 3);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int sum = 0;
    for (int v : rows[r]) sum += v;
    CHECK(sum == (r < 4 ? 3 : 4));
  }
}

TEST_CASE("marginal polytope dimension formula") {
  CHECK(marginal_polytope_dimension(2, 2, 1) == 2);
  CHECK(marginal_polytope_dimension(3, 2, 2) == 6);
  CHECK(marginal_polytope_dimension(2, 3, 2) == 8);
  CHECK(marginal_polytope_dimension(3, 2, 3) == 7);   // full: 2^3 - 1
  CHECK(marginal_polytope_dimension(4, 3, 4) == 80);  // full: 3^4 - 1
  CHECK_THROWS_AS(marginal_polytope_dimension(3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(marginal_polytope_dimension(3, 2, 4), std::invalid_argument);
}
