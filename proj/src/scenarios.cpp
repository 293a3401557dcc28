#include "factored_info/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "factored_info/codes.hpp"
#include "factored_info/exact_polytope.hpp"
#include "factored_info/family.hpp"
#include "factored_info/maximizer_atlas.hpp"
#include "factored_info/measures.hpp"
#include "factored_info/numeric_search.hpp"
#include "factored_info/oplog.hpp"

namespace factored_info {

namespace {

constexpr double kLog2 = 0.6931471805599453;
constexpr double kLog3 = 1.0986122886681098;

using SupportSet = std::set<std::string>;        // states as digit strings
using SupportFamily = std::set<SupportSet>;      // set of supports

// The eight maximizers of the multi-information of four binary variables.
const std::vector<std::vector<std::string>> kExampleFourI = {
    {"0000", "1111"}, {"0101", "1010"}, {"0001", "1110"}, {"0100", "1011"},
    {"0010", "1101"}, {"0111", "1000"}, {"0011", "1100"}, {"0110", "1001"},
};

// The twenty-four maximizers of MI((X1,X2),(Y1,Y2)) for binary variables.
const std::vector<std::vector<std::string>> kExampleFourMI = {
    {"0010", "0100", "1001", "1111"}, {"0000", "0110", "1001", "1111"},
    {"0001", "0100", "1010", "1111"}, {"0010", "0100", "1011", "1101"},
    {"0001", "0110", "1000", "1111"}, {"0011", "0101", "1010", "1100"},
    {"0000", "0101", "1011", "1110"}, {"0001", "0111", "1000", "1110"},
    {"0000", "0111", "1001", "1110"}, {"0000", "0101", "1010", "1111"},
    {"0011", "0110", "1000", "1101"}, {"0010", "0111", "1000", "1101"},
    {"0000", "0110", "1011", "1101"}, {"0011", "0110", "1001", "1100"},
    {"0000", "0111", "1010", "1101"}, {"0001", "0100", "1011", "1110"},
    {"0011", "0101", "1000", "1110"}, {"0010", "0101", "1000", "1111"},
    {"0001", "0110", "1011", "1100"}, {"0010", "0101", "1011", "1100"},
    {"0001", "0111", "1010", "1100"}, {"0011", "0100", "1010", "1101"},
    {"0010", "0111", "1001", "1100"}, {"0011", "0100", "1001", "1110"},
};

// MI maximizers expressible as convex combinations of I maximizers: the
// centroids of the identity-pairing polytopes...
const std::vector<std::vector<std::string>> kStarMarked = {
    {"0000", "0101", "1010", "1111"},
    {"0010", "0111", "1000", "1101"},
    {"0011", "0110", "1001", "1100"},
    {"0001", "0100", "1011", "1110"},
};

// ...and of the swapped-pairing polytopes.
const std::vector<std::vector<std::string>> kStarStarMarked = {
    {"0000", "0110", "1001", "1111"},
    {"0010", "0100", "1011", "1101"},
    {"0011", "0101", "1010", "1100"},
    {"0001", "0111", "1000", "1110"},
};

// Vertex supports of the four one-parameter SFMI maximizer families
// (identity pairing, n = N = 2).
const std::vector<std::vector<std::vector<std::string>>> kSfmiPolytopes2x2 = {
    {{"0000", "1111"}, {"0101", "1010"}},
    {{"0001", "1110"}, {"0100", "1011"}},
    {{"0010", "1101"}, {"0111", "1000"}},
    {{"0011", "1100"}, {"0110", "1001"}},
};

// The same for the swapped pairing (X1-Y2, X2-Y1).
const std::vector<std::vector<std::vector<std::string>>> kSfmiPrimePolytopes = {
    {{"0000", "1111"}, {"0110", "1001"}},
    {{"0010", "1101"}, {"0100", "1011"}},
    {{"0001", "1110"}, {"0111", "1000"}},
    {{"0011", "1100"}, {"0101", "1010"}},
};

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }

  void check(const std::string& label, bool ok, std::string detail = "") {
    result_.checks.push_back({label, ok, std::move(detail)});
  }

  ScenarioResult take() { return std::move(result_); }

 private:
  ScenarioResult result_;
};

std::vector<std::size_t> states_from_labels(
    const StateSpace& space, const std::vector<std::string>& labels) {
  std::vector<std::size_t> states;
  for (const std::string& label : labels) {
    std::vector<int> digits;
    for (char c : label) digits.push_back(c - '0');
    states.push_back(space.index_of(digits));
  }
  return states;
}

Distribution uniform_over_labels(const StateSpace& space,
                                 const std::vector<std::string>& labels) {
  return Distribution::uniform_over(space, states_from_labels(space, labels));
}

SupportSet support_labels(const Distribution& p) {
  SupportSet out;
  for (std::size_t s : p.support()) out.insert(p.space().state_label(s));
  return out;
}

SupportFamily support_family(const std::vector<Distribution>& dists) {
  SupportFamily out;
  for (const Distribution& p : dists) out.insert(support_labels(p));
  return out;
}

SupportFamily support_family_from_labels(
    const std::vector<std::vector<std::string>>& list) {
  SupportFamily out;
  for (const auto& labels : list) {
    out.insert(SupportSet(labels.begin(), labels.end()));
  }
  return out;
}

std::string count_detail(std::size_t got, std::size_t expected) {
  std::ostringstream os;
  os << "got " << got << ", expected " << expected;
  return os.str();
}

// -------------------------------------------------------------------------
// Scenarios
// -------------------------------------------------------------------------

ScenarioResult scenario_example_four() {
  Checker c("example-four");

  const MaximizerSet i_max = enumerate_I_maximizers(2, 4);
  c.check("8 multi-information maximizers",
          i_max.distributions.size() == 8,
          count_detail(i_max.distributions.size(), 8));
  c.check("I-maximizer set matches the published list",
          support_family(i_max.distributions) ==
              support_family_from_labels(kExampleFourI));

  const MaximizerSet mi_max = enumerate_blockMI_maximizers(2, 2);
  c.check("24 block-MI maximizers",
          mi_max.distributions.size() == 24,
          count_detail(mi_max.distributions.size(), 24));
  c.check("block-MI maximizer set matches the published list",
          support_family(mi_max.distributions) ==
              support_family_from_labels(kExampleFourMI));

  bool disjoint = true;
  for (const Distribution& p : i_max.distributions) {
    if (mi_max.contains(p)) disjoint = false;
  }
  c.check("the two maximizer sets are disjoint", disjoint);

  const auto identity_atlas =
      enumerate_sfmi_polytopes(2, 2, Pairing::identity(2));
  SupportFamily identity_centroids;
  for (const SfmiPolytope& poly : identity_atlas) {
    identity_centroids.insert(support_labels(poly.centroid));
  }
  c.check("identity-pairing centroids are the starred maximizers",
          identity_centroids == support_family_from_labels(kStarMarked));

  const auto swap_atlas = enumerate_sfmi_polytopes(2, 2, Pairing({1, 0}));
  SupportFamily swap_centroids;
  for (const SfmiPolytope& poly : swap_atlas) {
    swap_centroids.insert(support_labels(poly.centroid));
  }
  c.check("swapped-pairing centroids are the double-starred maximizers",
          swap_centroids == support_family_from_labels(kStarStarMarked));

  return c.take();
}

ScenarioResult scenario_example_threebinary() {
  Checker c("example-threebinary");
  const StateSpace space = StateSpace::homogeneous(3, 2);
  const StateSpace pair_space = StateSpace::homogeneous(2, 2);
  const MarginFamily family(3, {{0, 1}, {1, 2}});

  const Distribution diag = uniform_over_labels(pair_space, {"00", "11"});
  const Distribution anti = uniform_over_labels(pair_space, {"01", "10"});

  // Both margins diagonal: the joint distribution is forced to 1/2 on
  // {000, 111}.
  const auto forced = margin_specified_polytope(space, family, {diag, diag});
  c.check("diagonal margins force a point polytope", forced.report.is_point);
  c.check("the point is (000,111)/2",
          !forced.report.is_empty &&
              forced.vertex_distributions(space).front() ==
                  uniform_over_labels(space, {"000", "111"}));

  // Mixed margins: the (X1,X3) margin is determined.
  const auto mixed = margin_specified_polytope(space, family, {diag, anti});
  bool mixed_ok = mixed.report.is_point;
  if (mixed_ok) {
    const Distribution point = mixed.vertex_distributions(space).front();
    mixed_ok = marginal(point, {0, 2}) == anti;
  }
  c.check("mixed margins determine the (X1,X3) margin", mixed_ok);

  // All four margin combinations propagate to the four maximizers.
  const MaximizerSet maximizers = enumerate_I_maximizers(2, 3);
  SupportFamily reached;
  bool all_points = true;
  for (const Distribution& m1 : {diag, anti}) {
    for (const Distribution& m2 : {diag, anti}) {
      const auto poly = margin_specified_polytope(space, family, {m1, m2});
      if (!poly.report.is_point) {
        all_points = false;
        continue;
      }
      const Distribution point = poly.vertex_distributions(space).front();
      if (maximizers.contains(point)) {
        reached.insert(support_labels(point));
      }
    }
  }
  c.check("every margin combination is a point polytope", all_points);
  c.check("the points are exactly the 4 maximizers",
          reached == support_family(maximizers.distributions),
          count_detail(reached.size(), 4));
  return c.take();
}

SupportFamily polytope_vertex_supports(const SfmiPolytope& poly) {
  SupportFamily out;
  for (std::size_t v = 0; v < poly.report.vertices.size(); ++v) {
    out.insert(support_labels(poly.vertex_distribution(v)));
  }
  return out;
}

ScenarioResult scenario_sfmi_atlas(const std::string& name,
                                   const Pairing& pairing,
                                   const std::vector<std::vector<
                                       std::vector<std::string>>>& golden,
                                   const std::vector<std::vector<std::string>>&
                                       golden_centroids) {
  Checker c(name);
  const auto atlas = enumerate_sfmi_polytopes(2, 2, pairing);
  c.check("4 polytopes", atlas.size() == 4, count_detail(atlas.size(), 4));

  std::set<SupportFamily> got;
  for (const SfmiPolytope& poly : atlas) {
    got.insert(polytope_vertex_supports(poly));
  }
  std::set<SupportFamily> expected;
  for (const auto& poly : golden) {
    expected.insert(support_family_from_labels(poly));
  }
  c.check("vertex sets match the published one-parameter families",
          got == expected);

  bool dims_ok = true;
  bool vertices_ok = true;
  bool sfmi_ok = true;
  for (const SfmiPolytope& poly : atlas) {
    if (poly.report.affine_dimension != 1) dims_ok = false;
    if (poly.report.vertices.size() != 2 || poly.code_vertices.size() != 2) {
      vertices_ok = false;
    }
    for (std::size_t v = 0; v < poly.report.vertices.size(); ++v) {
      const double value =
          sfmi(poly.vertex_distribution(v).to_float(), pairing);
      if (std::abs(value - kLog2) > 1e-10) sfmi_ok = false;
    }
  }
  c.check("every polytope has affine dimension 1", dims_ok);
  c.check("every polytope has exactly its 2 code vertices", vertices_ok);
  c.check("every vertex attains SFMI = log 2", sfmi_ok);

  SupportFamily centroids;
  bool centroid_flags = true;
  for (const SfmiPolytope& poly : atlas) {
    centroids.insert(support_labels(poly.centroid));
    if (!centroid_is_blockMI_maximizer(poly)) centroid_flags = false;
  }
  c.check("centroids are block-MI maximizers", centroid_flags);
  c.check("centroids match the published markings",
          centroids == support_family_from_labels(golden_centroids));

  // Interior points of the one-parameter families still maximize the SFMI
  // but no longer the multi-information.
  bool interior_ok = true;
  for (const SfmiPolytope& poly : atlas) {
    RationalVector weights(poly.centroid.space().total_states(), Rational(0));
    const Rational alpha(1, 3);
    for (std::size_t c = 0; c < poly.report.vertices[0].size(); ++c) {
      weights[poly.system.column_labels[c]] =
          alpha * poly.report.vertices[0][c] +
          (1 - alpha) * poly.report.vertices[1][c];
    }
    const Distribution interior =
        Distribution::exact(poly.centroid.space(), std::move(weights));
    if (interior.support().size() != 4) interior_ok = false;
    if (std::abs(sfmi(interior, pairing) - kLog2) > 1e-12) interior_ok = false;
    if (is_I_maximizer(interior)) interior_ok = false;
    if (multi_information(interior) >= 3 * kLog2 - 1e-6) interior_ok = false;
  }
  c.check("interior points maximize SFMI but not the multi-information",
          interior_ok);
  return c.take();
}

ScenarioResult scenario_appendix_ex2() {
  Checker c("appendix-ex2");
  const std::vector<Code> pair_codes = enumerate_max_distance_codes(2, 2);
  // pair_codes[0] is {00,11}: the diagonal margin for every pair.
  const std::vector<Code> margins(3, pair_codes[0]);
  const SfmiPolytope poly =
      build_sfmi_polytope(2, 3, margins, Pairing::identity(3));

  const StateSpace joint = StateSpace::homogeneous(6, 2);
  const std::vector<std::string> support_labels_golden = {
      "000000", "001001", "010010", "011011",
      "100100", "101101", "110110", "111111"};
  c.check("support is the diagonal x=y slice",
          poly.support == states_from_labels(joint, support_labels_golden));

  const std::vector<std::vector<int>> golden_matrix = {
      {1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1},
      {1, 1, 0, 0, 1, 1, 0, 0}, {0, 0, 1, 1, 0, 0, 1, 1},
      {1, 0, 1, 0, 1, 0, 1, 0}, {0, 1, 0, 1, 0, 1, 0, 1}};
  bool matrix_ok = poly.system.matrix.size() == golden_matrix.size();
  for (std::size_t r = 0; matrix_ok && r < golden_matrix.size(); ++r) {
    for (std::size_t k = 0; k < golden_matrix[r].size(); ++k) {
      if (poly.system.matrix[r][k] != golden_matrix[r][k]) matrix_ok = false;
    }
  }
  c.check("constraint matrix matches the published 6x8 system", matrix_ok);

  // The same matrix arises from the margin-statistics map restricted to the
  // support, after dropping the rows of impossible margin states.
  const MarginFamily pair_family(6, {{0, 3}, {1, 4}, {2, 5}});
  const auto stats = margin_statistics_matrix(pair_family, joint);
  std::vector<std::vector<int>> restricted;
  for (const auto& row : stats) {
    std::vector<int> r;
    bool any = false;
    for (std::size_t s : poly.support) {
      r.push_back(row[s]);
      if (row[s] != 0) any = true;
    }
    if (any) restricted.push_back(std::move(r));
  }
  c.check("margin-statistics matrix restricts to the same system",
          restricted == golden_matrix);

  c.check("rank 4", poly.report.rank == 4,
          count_detail(static_cast<std::size_t>(poly.report.rank), 4));
  c.check("kernel dimension 4", poly.report.kernel_basis.size() == 4,
          count_detail(poly.report.kernel_basis.size(), 4));
  c.check("affine dimension 4", poly.report.affine_dimension == 4);

  const std::vector<std::vector<std::string>> golden_vertices = {
      {"000000", "111111"},
      {"001001", "110110"},
      {"010010", "101101"},
      {"011011", "100100"},
      {"000000", "011011", "101101", "110110"},
      {"001001", "010010", "100100", "111111"},
  };
  bool vertices_ok = poly.report.vertices.size() == 6;
  if (vertices_ok) {
    std::vector<Distribution> got;
    for (std::size_t v = 0; v < 6; ++v) {
      got.push_back(poly.vertex_distribution(v));
    }
    std::vector<Distribution> expected;
    for (const auto& labels : golden_vertices) {
      expected.push_back(uniform_over_labels(joint, labels));
    }
    for (const Distribution& e : expected) {
      if (std::find(got.begin(), got.end(), e) == got.end()) {
        vertices_ok = false;
      }
    }
  }
  c.check("exactly the 6 published vertices", vertices_ok,
          count_detail(poly.report.vertices.size(), 6));

  c.check("4 code vertices", poly.code_vertices.size() == 4);
  c.check("one simplex of 4 vertices",
          poly.simplices.size() == 1 && poly.simplices[0].size() == 4);
  c.check("centroid is uniform over the support",
          poly.centroid == Distribution::uniform_over(joint, poly.support));
  c.check("centroid maximizes MI(X,Y)", centroid_is_blockMI_maximizer(poly));
  const double mi =
      block_mutual_information(poly.centroid, BlockSplit::halves(6));
  c.check("centroid block MI = 3 log 2", std::abs(mi - 3 * kLog2) < 1e-10);

  // All eight polytopes: each has one simplex of four code vertices, and
  // the centroid supports with their vertex-pair groupings match the
  // published table line by line.
  const std::vector<std::vector<std::vector<std::string>>> golden_groups = {
      {{"000000", "111111"}, {"001001", "110110"},
       {"010010", "101101"}, {"011011", "100100"}},
      {{"000001", "111110"}, {"001000", "110111"},
       {"010011", "101100"}, {"011010", "100101"}},
      {{"000010", "111101"}, {"010000", "101111"},
       {"001011", "110100"}, {"011001", "100110"}},
      {{"000100", "111011"}, {"100000", "011111"},
       {"001101", "110010"}, {"101001", "010110"}},
      {{"000011", "111100"}, {"001010", "110101"},
       {"010001", "101110"}, {"011000", "100111"}},
      {{"000101", "111010"}, {"001100", "110011"},
       {"100001", "011110"}, {"101000", "010111"}},
      {{"000110", "111001"}, {"010100", "101011"},
       {"100010", "011101"}, {"110000", "001111"}},
      {{"000111", "111000"}, {"001110", "110001"},
       {"010101", "101010"}, {"011100", "100011"}},
  };
  const auto atlas = enumerate_sfmi_polytopes(2, 3, Pairing::identity(3));
  std::set<std::pair<SupportSet, SupportFamily>> got_structure;
  for (const SfmiPolytope& p : atlas) {
    SupportFamily simplex_supports;
    if (p.simplices.size() == 1) {
      for (std::size_t v : p.simplices[0]) {
        simplex_supports.insert(support_labels(p.vertex_distribution(v)));
      }
    }
    got_structure.emplace(support_labels(p.centroid),
                          std::move(simplex_supports));
  }
  std::set<std::pair<SupportSet, SupportFamily>> expected_structure;
  for (const auto& line : golden_groups) {
    SupportSet centroid_support;
    SupportFamily simplex_supports;
    for (const auto& group : line) {
      simplex_supports.insert(SupportSet(group.begin(), group.end()));
      for (const auto& label : group) centroid_support.insert(label);
    }
    expected_structure.emplace(std::move(centroid_support),
                               std::move(simplex_supports));
  }
  c.check("all 8 centroids and their vertex-pair groupings match the table",
          got_structure == expected_structure);
  return c.take();
}

ScenarioResult scenario_appendix_n2N3() {
  Checker c("appendix-n2N3");
  const std::vector<Code> pair_codes = enumerate_max_distance_codes(3, 2);
  const std::vector<Code> margins(2, pair_codes[0]);  // both diagonal
  const SfmiPolytope poly =
      build_sfmi_polytope(3, 2, margins, Pairing::identity(2));

  const StateSpace joint = StateSpace::homogeneous(4, 3);
  c.check("support is the 9-state diagonal slice",
          poly.support ==
              states_from_labels(joint, {"0000", "0101", "0202", "1010",
                                         "1111", "1212", "2020", "2121",
                                         "2222"}));
  c.check("rank 5", poly.report.rank == 5,
          count_detail(static_cast<std::size_t>(poly.report.rank), 5));
  c.check("kernel dimension 4", poly.report.kernel_basis.size() == 4,
          count_detail(poly.report.kernel_basis.size(), 4));
  c.check("affine dimension 4", poly.report.affine_dimension == 4);

  c.check("6 vertices, all code vertices",
          poly.report.vertices.size() == 6 && poly.code_vertices.size() == 6,
          count_detail(poly.report.vertices.size(), 6));
  c.check("2 simplices of 3 vertices",
          poly.simplices.size() == 2 && poly.simplices[0].size() == 3 &&
              poly.simplices[1].size() == 3);

  // The two published simplices for this margin choice.
  const std::vector<SupportFamily> golden_simplices = {
      support_family_from_labels({{"0000", "1111", "2222"},
                                  {"0101", "1212", "2020"},
                                  {"0202", "1010", "2121"}}),
      support_family_from_labels({{"0000", "1212", "2121"},
                                  {"1111", "2020", "0202"},
                                  {"2222", "0101", "1010"}}),
  };
  std::set<SupportFamily> got_simplices;
  for (const auto& simplex : poly.simplices) {
    SupportFamily family;
    for (std::size_t v : simplex) {
      family.insert(support_labels(poly.vertex_distribution(v)));
    }
    got_simplices.insert(std::move(family));
  }
  c.check("simplices match the published pair",
          got_simplices == std::set<SupportFamily>(golden_simplices.begin(),
                                                   golden_simplices.end()));

  c.check("common centroid maximizes MI(X,Y)",
          centroid_is_blockMI_maximizer(poly));

  // Two more published intersections, with their supports and simplices.
  // pair_codes[1] is {00,12,21}, pair_codes[2] is {01,10,22}.
  struct TernaryGolden {
    std::size_t second_margin;
    std::vector<std::string> support;
    std::vector<std::vector<std::vector<std::string>>> simplices;
  };
  const std::vector<TernaryGolden> ternary_goldens = {
      {1,
       {"0000", "0102", "0201", "1010", "1112", "1211", "2020", "2122",
        "2221"},
       {{{"0000", "1211", "2122"},
         {"1112", "2020", "0201"},
         {"1010", "0102", "2221"}},
        {{"0000", "1112", "2221"},
         {"1211", "0102", "2020"},
         {"2122", "1010", "0201"}}}},
      {2,
       {"0001", "0100", "0202", "1011", "1110", "1212", "2021", "2120",
        "2222"},
       {{{"0001", "1212", "2120"},
         {"2222", "1011", "0100"},
         {"2021", "1110", "0202"}},
        {{"0001", "2222", "1110"},
         {"1212", "2021", "0100"},
         {"2120", "0202", "1011"}}}},
  };
  for (const TernaryGolden& golden : ternary_goldens) {
    const SfmiPolytope mixed = build_sfmi_polytope(
        3, 2, {pair_codes[0], pair_codes[golden.second_margin]},
        Pairing::identity(2));
    std::ostringstream label;
    label << "mixed-margin polytope " << golden.second_margin
          << ": published support";
    c.check(label.str(),
            mixed.support == states_from_labels(joint, golden.support));
    std::set<SupportFamily> expected_simplices;
    for (const auto& simplex : golden.simplices) {
      expected_simplices.insert(support_family_from_labels(simplex));
    }
    std::set<SupportFamily> got_simplices;
    for (const auto& simplex : mixed.simplices) {
      SupportFamily family;
      for (std::size_t v : simplex) {
        family.insert(support_labels(mixed.vertex_distribution(v)));
      }
      got_simplices.insert(std::move(family));
    }
    std::ostringstream simplex_label;
    simplex_label << "mixed-margin polytope " << golden.second_margin
                  << ": published simplices";
    c.check(simplex_label.str(), got_simplices == expected_simplices);
  }

  const auto atlas = enumerate_sfmi_polytopes(3, 2, Pairing::identity(2));
  c.check("36 polytopes in the full atlas", atlas.size() == 36,
          count_detail(atlas.size(), 36));
  std::size_t total_code_vertices = 0;
  for (const SfmiPolytope& p : atlas) {
    total_code_vertices += p.code_vertices.size();
  }
  c.check("code vertices over the atlas total 216 = 3!^3",
          total_code_vertices == 216, count_detail(total_code_vertices, 216));
  return c.take();
}

ScenarioResult scenario_codes_counting() {
  Checker c("codes-counting");
  const std::vector<std::tuple<int, int, std::size_t>> cases = {
      {2, 2, 2}, {2, 3, 4}, {2, 4, 8}, {3, 2, 6}, {3, 3, 36}, {4, 2, 24}};
  for (const auto& [N, n, expected] : cases) {
    const auto codes = enumerate_max_distance_codes(N, n);
    bool all_valid = true;
    for (const Code& code : codes) {
      if (!code.is_max_distance() || code.minimum_distance() != n) {
        all_valid = false;
      }
    }
    std::ostringstream label;
    label << "N=" << N << " n=" << n << ": " << expected
          << " codes, all max-distance";
    std::set<Code> distinct(codes.begin(), codes.end());
    c.check(label.str(),
            codes.size() == expected && distinct.size() == expected &&
                all_valid,
            count_detail(codes.size(), expected));
  }

  // The six pair margins of the N=3 discussion (the sixth corrects an
  // obvious digit slip in the source list: {02,10,21} is the only
  // distance-2 completion).
  const auto margins3 = enumerate_max_distance_codes(3, 2);
  std::set<std::set<std::string>> got;
  for (const Code& code : margins3) {
    std::set<std::string> words;
    for (const Word& w : code.words()) {
      words.insert({static_cast<char>('0' + w[0]),
                    static_cast<char>('0' + w[1])});
    }
    got.insert(std::move(words));
  }
  const std::set<std::set<std::string>> expected3 = {
      {"00", "11", "22"}, {"00", "12", "21"}, {"01", "10", "22"},
      {"01", "12", "20"}, {"02", "11", "20"}, {"02", "10", "21"}};
  c.check("N=3 pair codes are the six displayed margins", got == expected3);

  bool matchings_ok = true;
  for (int N = 1; N <= 6; ++N) {
    const auto matchings = bipartite_matchings_partition(N);
    std::set<std::pair<int, int>> edges;
    for (const auto& matching : matchings) {
      if (static_cast<int>(matching.size()) != N) matchings_ok = false;
      std::set<int> left, right;
      for (const auto& [u, v] : matching) {
        left.insert(u);
        right.insert(v);
        if (!edges.insert({u, v}).second) matchings_ok = false;  // duplicate
      }
      if (static_cast<int>(left.size()) != N ||
          static_cast<int>(right.size()) != N) {
        matchings_ok = false;  // not a perfect matching
      }
    }
    if (edges.size() != static_cast<std::size_t>(N) * N) matchings_ok = false;
  }
  c.check("bipartite matchings partition all N^2 edges for N <= 6",
          matchings_ok);
  return c.take();
}

ScenarioResult scenario_partitions_counting() {
  Checker c("partitions-counting");

  for (const auto& [N, n] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    const CodePartition partition = partition_into_codes(N, n);
    std::size_t expected_parts = 1;
    for (int i = 0; i < n - 1; ++i) expected_parts *= N;
    std::set<Word> seen;
    bool ok = partition.parts.size() == expected_parts;
    for (const Code& part : partition.parts) {
      if (!part.is_max_distance()) ok = false;
      for (const Word& w : part.words()) {
        if (!seen.insert(w).second) ok = false;  // overlap
      }
    }
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= N;
    if (seen.size() != total) ok = false;  // not exhaustive
    std::ostringstream label;
    label << "N=" << N << " n=" << n << ": " << expected_parts
          << " disjoint exhaustive parts";
    c.check(label.str(), ok);
  }

  const std::vector<std::tuple<int, int, std::size_t>> counts = {
      {2, 2, 1}, {2, 3, 1}, {3, 2, 2}, {3, 3, 4}};
  for (const auto& [N, n, expected] : counts) {
    const auto partitions = enumerate_all_partitions(N, n);
    std::set<CodePartition> distinct(partitions.begin(), partitions.end());
    std::ostringstream label;
    label << "N=" << N << " n=" << n << ": " << expected << " partitions";
    c.check(label.str(),
            partitions.size() == expected && distinct.size() == expected,
            count_detail(partitions.size(), expected));
  }

  // Coset soundness: two partitions share no code; every code used is a
  // member of the full enumeration.
  for (const auto& [N, n] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}}) {
    const auto partitions = enumerate_all_partitions(N, n);
    const auto codes = enumerate_max_distance_codes(N, n);
    const std::set<Code> all_codes(codes.begin(), codes.end());
    std::set<Code> used;
    bool disjoint = true;
    bool members = true;
    for (const CodePartition& partition : partitions) {
      for (const Code& part : partition.parts) {
        if (!used.insert(part).second) disjoint = false;
        if (!all_codes.count(part)) members = false;
      }
    }
    std::ostringstream label;
    label << "N=" << N << " n=" << n
          << ": partitions share no code and use only enumerated codes";
    c.check(label.str(), disjoint && members);
  }
  return c.take();
}

ScenarioResult scenario_theorem_fmi_connected() {
  Checker c("theorem-fmi-connected");
  const SearchConfig config;
  const TheoremFmiReport report =
      verify_theorem_fmi(2, 3, MarginFamily(3, {{0, 1}, {1, 2}}), config);
  c.check("family is a connected covering",
          report.certificate.connected_covering);
  c.check("margin scan: every feasible combination is a point",
          report.point_polytopes == report.feasible_combinations &&
              report.feasible_combinations == 4);
  c.check("every point is a multi-information maximizer",
          report.points_matching_maximizer == report.point_polytopes);
  c.check("numeric optimum reaches log 2",
          report.best_value >= report.expected_max - 1e-5);
  c.check("every converged run lands on an enumerated maximizer",
          report.converged_to_max >= 1 &&
              report.matched_to_maximizer == report.converged_to_max);
  c.check("report passes", report.passed);
  return c.take();
}

ScenarioResult scenario_theorem_fmi_disconnected() {
  Checker c("theorem-fmi-disconnected");
  const SearchConfig config;
  const TheoremFmiReport report =
      verify_theorem_fmi(2, 4, MarginFamily(4, {{0, 1}, {2, 3}}), config);
  c.check("family is not a connected covering",
          !report.certificate.connected_covering);
  c.check("a margin choice yields affine dimension 1",
          report.max_affine_dimension == 1);
  c.check("witness exists", report.witness.has_value());
  c.check("witness attains the maximal I_Lambda = log 2",
          std::abs(report.witness_i_lambda - kLog2) < 1e-9);
  c.check("witness multi-information is 2 log 2 < 3 log 2",
          std::abs(report.witness_multi_information - 2 * kLog2) < 1e-9);
  c.check("report passes", report.passed);
  return c.take();
}

ScenarioResult scenario_measure_basics() {
  Checker c("measure-basics");
  const StateSpace four(std::vector<int>{4});
  const StateSpace pair = StateSpace::homogeneous(2, 2);
  const StateSpace triple = StateSpace::homogeneous(3, 2);

  c.check("entropy of a point mass is 0",
          entropy(Distribution::point_mass(StateSpace::homogeneous(4, 2), 0)) ==
              0.0);
  c.check("entropy of uniform-4 is log 4",
          std::abs(entropy(Distribution::uniform(four)) - std::log(4.0)) <
              1e-12);
  const Distribution skewed =
      Distribution::floating(four, {0.1, 0.2, 0.3, 0.4});
  c.check("entropy of (.1,.2,.3,.4) matches the summation oracle",
          std::abs(entropy(skewed) - 1.2798542258336676) < 1e-12);

  const Distribution diag = uniform_over_labels(pair, {"00", "11"});
  c.check("KL(p,p) = 0", kl_divergence(diag, diag) == 0.0);
  c.check("KL(delta, uniform-N) = log N",
          std::abs(kl_divergence(Distribution::point_mass(four, 0),
                                 Distribution::uniform(four)) -
                   std::log(4.0)) < 1e-12);
  c.check("KL to the product of margins = log 2",
          std::abs(kl_divergence(diag, product_of_marginals(diag)) - kLog2) <
              1e-12);
  c.check("KL with missing support is +infinity",
          std::isinf(kl_divergence(Distribution::uniform(pair),
                                   uniform_over_labels(pair, {"00", "11"}))));

  const StateSpace six = StateSpace::homogeneous(4, 2);
  const Distribution long_diag =
      uniform_over_labels(six, {"0000", "1111"});
  c.check("marginal of (0000,1111)/2 onto {1,2} is the diagonal pair",
          marginal(long_diag, {0, 1}) == diag);
  c.check("product of marginals of the diagonal pair is uniform",
          product_of_marginals(diag) == Distribution::uniform(pair));

  const Distribution triple_diag = uniform_over_labels(triple, {"000", "111"});
  c.check("I of (000,111)/2 is 2 log 2",
          std::abs(multi_information(triple_diag) - 2 * kLog2) < 1e-12);
  c.check("I of a product distribution is 0",
          std::abs(multi_information(Distribution::uniform(triple))) < 1e-12);

  const Distribution four_cycle = uniform_over_labels(
      six, {"0000", "0101", "1010", "1111"});
  c.check("block MI of the 4-cycle is log 4",
          std::abs(block_mutual_information(four_cycle, BlockSplit::halves(4)) -
                   std::log(4.0)) < 1e-12);
  c.check("H(X2|X1) of the diagonal pair is 0",
          std::abs(conditional_entropy(diag, {1}, {0})) < 1e-12);
  c.check("H(X2|X1) of independent uniform bits is log 2",
          std::abs(conditional_entropy(Distribution::uniform(pair), {1}, {0}) -
                   kLog2) < 1e-12);

  c.check("hamming examples",
          hamming_distance(std::vector<int>{0, 0, 0, 0},
                           std::vector<int>{0, 0, 0, 0}) == 0 &&
              hamming_distance(std::vector<int>{0, 0, 0, 0},
                               std::vector<int>{1, 1, 1, 1}) == 4 &&
              hamming_distance(std::vector<int>{0, 1, 0, 2},
                               std::vector<int>{2, 1, 0, 2}) == 1);

  c.check("marginal polytope dimensions 2, 6, 8",
          marginal_polytope_dimension(2, 2, 1) == 2 &&
              marginal_polytope_dimension(3, 2, 2) == 6 &&
              marginal_polytope_dimension(2, 3, 2) == 8);

  c.check("I_lambda of the full set equals I",
          std::abs(i_lambda(triple_diag, MarginFamily::full_set(3)) -
                   multi_information(triple_diag)) < 1e-12);
  c.check("I_lambda of singletons vanishes",
          i_lambda(Distribution::uniform(pair),
                   MarginFamily(2, {{0}, {1}})) == 0.0);
  c.check("FMI of (000,111)/2 is log 2",
          std::abs(fmi(triple_diag) - kLog2) < 1e-12);
  c.check("SFMI of (0000,1111)/2 is log 2",
          std::abs(sfmi(long_diag, Pairing::identity(2)) - kLog2) < 1e-12);

  const auto chain = is_connected_covering(MarginFamily(4, {{0, 1}, {1, 2},
                                                            {2, 3}}));
  const auto split = is_connected_covering(MarginFamily(4, {{0, 1}, {2, 3}}));
  const auto gap = is_connected_covering(MarginFamily(3, {{0, 1}}));
  c.check("covering certificates: chain yes, split no, gap no",
          chain.connected_covering && !split.connected_covering &&
              !gap.connected_covering && split.components.size() == 2 &&
              gap.uncovered_index.has_value() && *gap.uncovered_index == 2);

  const auto stats =
      margin_statistics_matrix(MarginFamily(2, {{0}, {1}}), pair);
  const std::vector<std::vector<int>> golden = {
      {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}};
  c.check("margin statistics of two unary margins", stats == golden);
  return c.take();
}

ScenarioResult scenario_optimize_attainment() {
  Checker c("optimize-attainment");
  const SearchConfig config;

  const std::vector<std::tuple<int, int, double>> cases = {
      {2, 2, kLog2}, {2, 3, 2 * kLog2}, {3, 2, kLog3}};
  for (const auto& [N, n, bound] : cases) {
    const StateSpace space = StateSpace::homogeneous(n, N);
    const MaximizerSet maximizers = enumerate_I_maximizers(N, n);
    const SearchResult result = maximize_measure(
        Measure::multi_information(), space, config, &maximizers);
    std::ostringstream label;
    label << "I attains (n-1)log N for N=" << N << " n=" << n;
    c.check(label.str(), std::abs(result.best_value - bound) < 1e-5);
    std::ostringstream bound_label;
    bound_label << "no iterate exceeds the bound for N=" << N << " n=" << n;
    c.check(bound_label.str(), result.max_observed_value <= bound + 1e-9);
    std::ostringstream match_label;
    match_label << "best point rounds to a maximizer for N=" << N
                << " n=" << n;
    c.check(match_label.str(), result.matched_maximizer.has_value() &&
                                   result.matched_tv_distance < 1e-4);
  }

  // SFMI on two binary pairs: optimum log 2, with the best point close to
  // one of the four polytopes (margin distance).
  const StateSpace sfmi_space = StateSpace::homogeneous(4, 2);
  const Pairing identity = Pairing::identity(2);
  const SearchResult sfmi_result =
      maximize_measure(Measure::sfmi(identity), sfmi_space, config);
  c.check("SFMI optimum reaches log 2",
          std::abs(sfmi_result.best_value - kLog2) < 1e-6);
  const auto pair_codes = enumerate_max_distance_codes(2, 2);
  double margin_distance = 0.0;
  for (int i = 0; i < 2; ++i) {
    const Distribution margin = marginal(
        sfmi_result.best_point, {i, 2 + identity.image(i)});
    double best = 2.0;
    for (const Code& code : pair_codes) {
      const Distribution target = uniform_over_labels(
          StateSpace::homogeneous(2, 2),
          {std::string() + static_cast<char>('0' + code.words()[0][0]) +
               static_cast<char>('0' + code.words()[0][1]),
           std::string() + static_cast<char>('0' + code.words()[1][0]) +
               static_cast<char>('0' + code.words()[1][1])});
      double tv = 0.0;
      for (std::size_t s = 0; s < 4; ++s) {
        tv += std::abs(margin.weight(s) - target.weight(s));
      }
      best = std::min(best, 0.5 * tv);
    }
    margin_distance = std::max(margin_distance, best);
  }
  c.check("best point sits within TV 1e-4 of a maximal margin pair",
          margin_distance < 1e-4);

  // FMI on three binary variables: optimum log 2, matched to a maximizer.
  const MaximizerSet fmi_maximizers = enumerate_I_maximizers(2, 3);
  const SearchResult fmi_result =
      maximize_measure(Measure::fmi(), StateSpace::homogeneous(3, 2), config,
                       &fmi_maximizers);
  c.check("FMI optimum reaches log 2",
          std::abs(fmi_result.best_value - kLog2) < 1e-5);
  c.check("FMI best point rounds to an I-maximizer",
          fmi_result.matched_maximizer.has_value() &&
              fmi_result.matched_tv_distance < 1e-4);
  return c.take();
}

using ScenarioFn = ScenarioResult (*)();

const std::vector<std::pair<std::string, ScenarioFn>>& registry() {
  static const std::vector<std::pair<std::string, ScenarioFn>> scenarios = {
      {"example-four", scenario_example_four},
      {"example-threebinary", scenario_example_threebinary},
      {"example-sfmi-2x2",
       [] {
         return scenario_sfmi_atlas("example-sfmi-2x2", Pairing::identity(2),
                                    kSfmiPolytopes2x2, kStarMarked);
       }},
      {"example-sfmi-prime",
       [] {
         return scenario_sfmi_atlas("example-sfmi-prime", Pairing({1, 0}),
                                    kSfmiPrimePolytopes, kStarStarMarked);
       }},
      {"appendix-ex2", scenario_appendix_ex2},
      {"appendix-n2N3", scenario_appendix_n2N3},
      {"codes-counting", scenario_codes_counting},
      {"partitions-counting", scenario_partitions_counting},
      {"theorem-fmi-connected", scenario_theorem_fmi_connected},
      {"theorem-fmi-disconnected", scenario_theorem_fmi_disconnected},
      {"measure-basics", scenario_measure_basics},
      {"optimize-attainment", scenario_optimize_attainment},
  };
  return scenarios;
}

}  // namespace

bool ScenarioResult::passed() const {
  for (const CheckLine& check : checks) {
    if (!check.passed) return false;
  }
  return !checks.empty();
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

ScenarioResult run_scenario(const std::string& name) {
  for (const auto& [registered, fn] : registry()) {
    if (registered == name) return fn();
  }
  throw std::invalid_argument("unknown scenario: " + name);
}

std::vector<ScenarioResult> run_all_scenarios() {
  oplog::reset();
  std::vector<ScenarioResult> results;
  for (const auto& [name, fn] : registry()) results.push_back(fn());

  ScenarioResult coverage;
  coverage.name = "op-coverage";
  const std::vector<std::string> missing = oplog::missing_ops();
  std::string detail;
  for (const std::string& op : missing) {
    if (!detail.empty()) detail += ", ";
    detail += op;
  }
  coverage.checks.push_back({"every public operation was exercised",
                             missing.empty(), std::move(detail)});
  results.push_back(std::move(coverage));
  return results;
}

}  // namespace factored_info
