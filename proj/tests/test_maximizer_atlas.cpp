#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "factored_info/maximizer_atlas.hpp"
#include "factored_info/measures.hpp"

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

std::set<std::vector<std::size_t>> support_set(
    const std::vector<Distribution>& dists) {
  std::set<std::vector<std::size_t>> out;
  for (const Distribution& p : dists) out.insert(p.support());
  return out;
}

// Exact affine independence: rank of the difference matrix is m - 1.
bool affinely_independent(const std::vector<RationalVector>& points) {
  if (points.size() <= 1) return true;
  RationalMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalVector d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) {
      d[c] = points[i][c] - points[0][c];
    }
    diffs.push_back(std::move(d));
  }
  return rational_rank_and_kernel(diffs).rank ==
         static_cast<int>(points.size()) - 1;
}

}  // namespace

TEST_CASE("I-maximizer counts") {
  CHECK(enumerate_I_maximizers(2, 2).distributions.size() == 2);
  CHECK(enumerate_I_maximizers(2, 3).distributions.size() == 4);
  CHECK(enumerate_I_maximizers(2, 4).distributions.size() == 8);
  CHECK(enumerate_I_maximizers(3, 2).distributions.size() == 6);
  CHECK_THROWS_AS(enumerate_I_maximizers(5, 9), cap_exceeded);
}

TEST_CASE("every enumerated I-maximizer attains the sharp bound") {
  for (const auto& [N, n] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    const double bound = (n - 1) * std::log(static_cast<double>(N));
    for (const Distribution& p : enumerate_I_maximizers(N, n).distributions) {
      CHECK(is_I_maximizer(p));
      CHECK(std::abs(multi_information(p) - bound) < 1e-12);
    }
  }
}

TEST_CASE("block-MI maximizers") {
  const MaximizerSet two = enumerate_blockMI_maximizers(2, 1);
  CHECK(two.distributions.size() == 2);
  CHECK(support_set(two.distributions) ==
        support_set(enumerate_I_maximizers(2, 2).distributions));

  const MaximizerSet mi = enumerate_blockMI_maximizers(2, 2);
  CHECK(mi.distributions.size() == 24);
  const BlockSplit split = BlockSplit::halves(4);
  for (const Distribution& p : mi.distributions) {
    CHECK(std::abs(block_mutual_information(p, split) - 2 * kLog2) < 1e-12);
  }

  // disjoint from the 8 I-maximizers
  const MaximizerSet i_max = enumerate_I_maximizers(2, 4);
  for (const Distribution& p : i_max.distributions) {
    CHECK(!mi.contains(p));
  }

  CHECK_THROWS_AS(enumerate_blockMI_maximizers(3, 2), cap_exceeded);
}

TEST_CASE("is_I_maximizer membership") {
  const StateSpace triple = StateSpace::homogeneous(3, 2);
  CHECK(is_I_maximizer(from_labels(triple, {"000", "111"})));
  CHECK(!is_I_maximizer(Distribution::uniform(triple)));
  const StateSpace quad = StateSpace::homogeneous(4, 2);
  CHECK(!is_I_maximizer(from_labels(quad, {"0000", "0101", "1010", "1111"})));
  CHECK(!is_I_maximizer(from_labels(triple, {"000", "110"})));
  // non-uniform weights on a valid code
  CHECK(!is_I_maximizer(Distribution::exact(
      StateSpace::homogeneous(2, 2),
      {Rational(1, 3), Rational(0), Rational(0), Rational(2, 3)})));
  CHECK_THROWS_AS(is_I_maximizer(Distribution::uniform(triple).to_float()),
                  std::invalid_argument);
}

TEST_CASE("marginals of maximizers are maximizers") {
  for (const auto& [N, n] : std::vector<std::pair<int, int>>{
           {2, 3}, {2, 4}, {3, 2}}) {
    CAPTURE(N);
    CAPTURE(n);
    const MaximizerSet maximizers = enumerate_I_maximizers(N, n);
    // enumerate every nonempty subset of variables
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> lambda;
      for (int v = 0; v < n; ++v) {
        if (mask & (1 << v)) lambda.push_back(v);
      }
      for (const Distribution& p : maximizers.distributions) {
        const Distribution m = marginal(p, lambda);
        if (lambda.size() == 1) {
          CHECK(m == Distribution::uniform(m.space()));
        } else if (static_cast<int>(lambda.size()) == n) {
          CHECK(maximizers.contains(m));
        } else {
          CHECK(enumerate_I_maximizers(N, static_cast<int>(lambda.size()))
                    .contains(m));
        }
      }
    }
  }
}

TEST_CASE("SFMI polytope structure for the three paper shapes") {
  for (const auto& [N, n] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {3, 2}}) {
    CAPTURE(N);
    CAPTURE(n);
    const Pairing pairing = Pairing::identity(n);
    const auto atlas = enumerate_sfmi_polytopes(N, n, pairing);

    std::size_t expected_polytopes = 1;
    for (int i = 0; i < n; ++i) {
      std::size_t f = 1;
      for (int k = 2; k <= N; ++k) f *= static_cast<std::size_t>(k);
      expected_polytopes *= f;
    }
    CHECK(atlas.size() == expected_polytopes);

    std::size_t expected_support = 1;
    for (int i = 0; i < n; ++i) expected_support *= static_cast<std::size_t>(N);
    std::size_t code_vertices_expected = 1;
    {
      std::size_t f = 1;
      for (int k = 2; k <= N; ++k) f *= static_cast<std::size_t>(k);
      for (int i = 0; i < n - 1; ++i) code_vertices_expected *= f;
    }
    std::size_t simplices_expected = 1;
    {
      std::size_t f = 1;
      for (int k = 2; k <= N - 1; ++k) f *= static_cast<std::size_t>(k);
      for (int i = 0; i < n - 1; ++i) simplices_expected *= f;
    }
    const std::size_t simplex_size = expected_support / N;
    const int dim = static_cast<int>(expected_support) - 1 - n * (N - 1);

    // supports cover without overlap only in the binary case; for N >= 3
    // the polytopes are disjoint as distribution sets while their supports
    // share states (enumerate_sfmi_polytopes certifies vertex disjointness)
    std::set<std::size_t> all_support;
    for (const SfmiPolytope& poly : atlas) {
      CHECK(poly.support.size() == expected_support);
      for (std::size_t s : poly.support) {
        const bool fresh = all_support.insert(s).second;
        if (N == 2) CHECK(fresh);
      }
      CHECK(poly.report.affine_dimension == dim);
      CHECK(poly.code_vertices.size() == code_vertices_expected);
      CHECK(poly.simplices.size() == simplices_expected);

      const Pairing& p = poly.pairing;
      for (std::size_t v = 0; v < poly.report.vertices.size(); ++v) {
        CHECK(std::abs(sfmi(poly.vertex_distribution(v).to_float(), p) -
                       std::log(static_cast<double>(N))) < 1e-10);
      }

      for (const auto& simplex : poly.simplices) {
        CHECK(simplex.size() == simplex_size);
        std::vector<RationalVector> points;
        std::set<std::size_t> simplex_support;
        for (std::size_t v : simplex) {
          // simplex members are code vertices
          CHECK(std::find(poly.code_vertices.begin(),
                          poly.code_vertices.end(),
                          v) != poly.code_vertices.end());
          points.push_back(poly.report.vertices[v]);
          for (std::size_t s : poly.vertex_distribution(v).support()) {
            CHECK(simplex_support.insert(s).second);  // disjoint supports
          }
        }
        CHECK(affinely_independent(points));

        // common centroid: the average of the simplex vertices is the
        // uniform distribution over the polytope support
        RationalVector mean(poly.support.size(), Rational(0));
        for (const RationalVector& point : points) {
          for (std::size_t c = 0; c < mean.size(); ++c) {
            mean[c] += point[c] /
                       Rational(static_cast<unsigned long>(points.size()));
          }
        }
        for (const Rational& value : mean) {
          CHECK(value == Rational(1, static_cast<unsigned long>(
                                          poly.support.size())));
        }
      }

      CHECK(centroid_is_blockMI_maximizer(poly));
      CHECK(poly.centroid.support().size() == expected_support);
    }

    // Cor. 13: the code vertices across the atlas are exactly the
    // I-maximizers of 2n N-ary variables.
    std::set<std::vector<std::size_t>> code_vertex_supports;
    std::vector<Distribution> code_vertex_dists;
    for (const SfmiPolytope& poly : atlas) {
      for (std::size_t v : poly.code_vertices) {
        code_vertex_dists.push_back(poly.vertex_distribution(v));
      }
    }
    const MaximizerSet i_max = enumerate_I_maximizers(N, 2 * n);
    CHECK(code_vertex_dists.size() == i_max.distributions.size());
    CHECK(support_set(code_vertex_dists) ==
          support_set(i_max.distributions));
    // strictness: the centroid maximizes SFMI but not I
    CHECK(!is_I_maximizer(atlas.front().centroid));
  }
}

TEST_CASE("swapped pairing produces a different but isomorphic atlas") {
  const auto swapped = enumerate_sfmi_polytopes(2, 2, Pairing({1, 0}));
  CHECK(swapped.size() == 4);
  std::set<std::vector<std::size_t>> identity_supports;
  for (const SfmiPolytope& poly :
       enumerate_sfmi_polytopes(2, 2, Pairing::identity(2))) {
    identity_supports.insert(poly.support);
  }
  std::set<std::vector<std::size_t>> swapped_supports;
  for (const SfmiPolytope& poly : swapped) {
    swapped_supports.insert(poly.support);
  }
  CHECK(identity_supports != swapped_supports);
}

TEST_CASE("build_sfmi_polytope validates margin codes") {
  const Pairing identity = Pairing::identity(2);
  const Code bad(2, {{0, 0}, {0, 1}});
  const Code good(2, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(build_sfmi_polytope(2, 2, {bad, good}, identity),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_sfmi_polytope(2, 2, {good}, identity),
                  std::invalid_argument);
}

TEST_CASE("atlas cap") {
  CHECK_THROWS_AS(enumerate_sfmi_polytopes(4, 3, Pairing::identity(3)),
                  cap_exceeded);
}
