#include "factored_info/maximizer_atlas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "factored_info/measures.hpp"
#include "factored_info/oplog.hpp"

namespace factored_info {

namespace {

// k! saturated at cap + 1.
std::uint64_t saturating_factorial(std::uint64_t k, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) {
    if (f > cap / i) return cap + 1;
    f *= i;
  }
  return f;
}

std::uint64_t saturating_power(std::uint64_t base, int exponent,
                               std::uint64_t cap) {
  std::uint64_t v = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

// The margin code (u, sigma(u)) as a permutation table sigma.
std::vector<int> margin_code_permutation(const Code& code, int N) {
  if (code.alphabet() != N || code.length() != 2 ||
      static_cast<int>(code.size()) != N || !code.is_max_distance()) {
    throw std::invalid_argument(
        "margin choice must be a length-2, distance-2, cardinality-N code");
  }
  std::vector<int> sigma(static_cast<std::size_t>(N), -1);
  for (const Word& w : code.words()) {
    sigma[static_cast<std::size_t>(w[0])] = w[1];
  }
  return sigma;
}

}  // namespace

bool MaximizerSet::contains(const Distribution& p) const {
  for (const Distribution& q : distributions) {
    if (p == q) return true;
  }
  return false;
}

MaximizerSet enumerate_I_maximizers(int N, int n, std::uint64_t cap) {
  oplog::note("maximizer_atlas.enumerate_I_maximizers");
  if (N < 2 || n < 2) {
    throw std::invalid_argument("I-maximizer enumeration needs N, n >= 2");
  }
  const StateSpace space = StateSpace::homogeneous(n, N);
  MaximizerSet set{MaximizerSet::Kind::multi_information, {}};
  for (const Code& code : enumerate_max_distance_codes(N, n, cap)) {
    std::vector<std::size_t> states;
    for (const Word& w : code.words()) states.push_back(space.index_of(w));
    set.distributions.push_back(Distribution::uniform_over(space, states));
  }
  return set;
}

MaximizerSet enumerate_blockMI_maximizers(int N, int n, std::uint64_t cap) {
  oplog::note("maximizer_atlas.enumerate_blockMI_maximizers");
  if (N < 2 || n < 1) {
    throw std::invalid_argument("MI-maximizer enumeration needs N >= 2, n >= 1");
  }
  const std::uint64_t composite =
      saturating_power(static_cast<std::uint64_t>(N), n, cap);
  const std::uint64_t count =
      composite > cap ? cap + 1 : saturating_factorial(composite, cap);
  if (count > cap) {
    throw cap_exceeded("block-MI maximizer count (N^n)!", count, cap);
  }

  const StateSpace block = StateSpace::homogeneous(n, N);
  const StateSpace joint = StateSpace::homogeneous(2 * n, N);
  const std::size_t m = block.total_states();

  MaximizerSet set{MaximizerSet::Kind::block_mi, {}};
  std::vector<std::size_t> rho(m);
  std::iota(rho.begin(), rho.end(), std::size_t{0});
  do {
    std::vector<std::size_t> states;
    states.reserve(m);
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<int> joint_state = block.state_of(a);
      const std::vector<int> y = block.state_of(rho[a]);
      joint_state.insert(joint_state.end(), y.begin(), y.end());
      states.push_back(joint.index_of(joint_state));
    }
    set.distributions.push_back(Distribution::uniform_over(joint, states));
  } while (std::next_permutation(rho.begin(), rho.end()));
  return set;
}

bool is_I_maximizer(const Distribution& p) {
  oplog::note("maximizer_atlas.is_I_maximizer");
  if (!p.is_exact()) {
    throw std::invalid_argument("is_I_maximizer needs an exact distribution");
  }
  if (!p.space().is_homogeneous()) {
    throw std::invalid_argument("is_I_maximizer needs a homogeneous space");
  }
  const int N = p.space().cardinality(0);
  const int n = p.space().variable_count();

  const std::vector<std::size_t> support = p.support();
  if (static_cast<int>(support.size()) != N) return false;
  const Rational share(1, static_cast<unsigned long>(N));
  for (std::size_t s : support) {
    if (p.exact_weight(s) != share) return false;
  }
  std::vector<std::vector<int>> states;
  for (std::size_t s : support) states.push_back(p.space().state_of(s));
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (hamming_distance(states[i], states[j]) != n) return false;
    }
  }
  return true;
}

Distribution SfmiPolytope::vertex_distribution(std::size_t vertex_index) const {
  const StateSpace space = StateSpace::homogeneous(2 * n, N);
  RationalVector weights(space.total_states(), Rational(0));
  const RationalVector& vertex = report.vertices.at(vertex_index);
  for (std::size_t k = 0; k < vertex.size(); ++k) {
    weights[system.column_labels[k]] = vertex[k];
  }
  return Distribution::exact(space, std::move(weights));
}

SfmiPolytope build_sfmi_polytope(int N, int n,
                                 const std::vector<Code>& margin_choice,
                                 const Pairing& pairing) {
  oplog::note("maximizer_atlas.build_sfmi_polytope");
  if (N < 2 || n < 1) {
    throw std::invalid_argument("SFMI polytope needs N >= 2 and n >= 1");
  }
  if (static_cast<int>(margin_choice.size()) != n ||
      pairing.pair_count() != n) {
    throw std::invalid_argument("need one margin code and one pairing entry "
                                "per pair of variables");
  }
  std::vector<std::vector<int>> sigma;
  for (const Code& code : margin_choice) {
    sigma.push_back(margin_code_permutation(code, N));
  }

  const StateSpace joint = StateSpace::homogeneous(2 * n, N);
  const StateSpace block = StateSpace::homogeneous(n, N);

  // The margins determine y from x: y_{pi(i)} = sigma_i(x_i), so the
  // support has exactly one joint state per x-tuple.
  std::vector<std::size_t> support;
  support.reserve(block.total_states());
  for (std::size_t a = 0; a < block.total_states(); ++a) {
    const std::vector<int> x = block.state_of(a);
    std::vector<int> state(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      state[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
      state[static_cast<std::size_t>(n + pairing.image(i))] =
          sigma[static_cast<std::size_t>(i)]
               [static_cast<std::size_t>(x[static_cast<std::size_t>(i)])];
    }
    support.push_back(joint.index_of(state));
  }
  std::sort(support.begin(), support.end());

  // Each margin contributes N equalities: the mass of the support states
  // with x_i = k is 1/N.
  ConstraintSystem system;
  system.column_labels = support;
  std::vector<std::vector<int>> support_states;
  for (std::size_t s : support) support_states.push_back(joint.state_of(s));
  const Rational value(1, static_cast<unsigned long>(N));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < N; ++k) {
      RationalVector row(support.size(), Rational(0));
      for (std::size_t c = 0; c < support.size(); ++c) {
        if (support_states[c][static_cast<std::size_t>(i)] == k) row[c] = 1;
      }
      system.matrix.push_back(std::move(row));
      system.rhs.push_back(value);
    }
  }

  PolytopeReport report = analyze_polytope(system);

  std::vector<std::size_t> code_vertices;
  for (std::size_t v = 0; v < report.vertices.size(); ++v) {
    std::size_t support_size = 0;
    for (const Rational& w : report.vertices[v]) {
      if (w != 0) ++support_size;
    }
    if (support_size != static_cast<std::size_t>(N)) continue;
    RationalVector weights(joint.total_states(), Rational(0));
    for (std::size_t k = 0; k < report.vertices[v].size(); ++k) {
      weights[support[k]] = report.vertices[v][k];
    }
    if (is_I_maximizer(Distribution::exact(joint, std::move(weights)))) {
      code_vertices.push_back(v);
    }
  }

  // Simplices: push the canonical circular-shift partitions of x-strings
  // through the per-pair margin permutations. Each part becomes a code
  // vertex; parts of one partition have disjoint supports.
  std::vector<std::vector<std::size_t>> simplices;
  for (const CodePartition& partition : enumerate_all_partitions(N, n)) {
    std::vector<std::size_t> simplex;
    for (const Code& part : partition.parts) {
      RationalVector expected(support.size(), Rational(0));
      for (const Word& w : part.words()) {
        std::vector<int> state(static_cast<std::size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
          state[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
          state[static_cast<std::size_t>(n + pairing.image(i))] =
              sigma[static_cast<std::size_t>(i)]
                   [static_cast<std::size_t>(w[static_cast<std::size_t>(i)])];
        }
        const std::size_t idx = joint.index_of(state);
        const auto it =
            std::lower_bound(support.begin(), support.end(), idx);
        expected[static_cast<std::size_t>(it - support.begin())] =
            Rational(1, static_cast<unsigned long>(N));
      }
      const auto found = std::find(report.vertices.begin(),
                                   report.vertices.end(), expected);
      if (found == report.vertices.end()) {
        throw std::logic_error("constructed simplex vertex is not a vertex "
                               "of the polytope");
      }
      simplex.push_back(
          static_cast<std::size_t>(found - report.vertices.begin()));
    }
    std::sort(simplex.begin(), simplex.end());
    simplices.push_back(std::move(simplex));
  }
  std::sort(simplices.begin(), simplices.end());

  Distribution centroid = Distribution::uniform_over(joint, support);

  return SfmiPolytope{N,
                      n,
                      margin_choice,
                      pairing,
                      std::move(support),
                      std::move(system),
                      std::move(report),
                      std::move(code_vertices),
                      std::move(simplices),
                      std::move(centroid)};
}

std::vector<SfmiPolytope> enumerate_sfmi_polytopes(int N, int n,
                                                   const Pairing& pairing,
                                                   std::uint64_t cap) {
  oplog::note("maximizer_atlas.enumerate_sfmi_polytopes");
  const std::uint64_t count = saturating_power(
      saturating_factorial(static_cast<std::uint64_t>(N), cap), n, cap);
  if (count > cap) {
    throw cap_exceeded("SFMI polytope count N!^n", count, cap);
  }
  const std::vector<Code> pair_codes = enumerate_max_distance_codes(N, 2);

  std::vector<SfmiPolytope> out;
  out.reserve(count);
  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  // The polytopes are pairwise disjoint as sets of distributions; their
  // vertex sets certify this exactly. Supports themselves are disjoint only
  // in the binary case (a joint state determines the margin choice only
  // when N = 2).
  std::set<std::size_t> seen_states;
  std::set<RationalVector> seen_vertices;
  while (true) {
    std::vector<Code> margin_choice;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      margin_choice.push_back(pair_codes[choice[i]]);
    }
    out.push_back(build_sfmi_polytope(N, n, margin_choice, pairing));
    const SfmiPolytope& latest = out.back();
    if (N == 2) {
      for (std::size_t s : latest.support) {
        if (!seen_states.insert(s).second) {
          throw std::logic_error("binary SFMI polytope supports overlap");
        }
      }
    }
    const StateSpace joint = StateSpace::homogeneous(2 * n, N);
    for (const RationalVector& vertex : latest.report.vertices) {
      RationalVector ambient(joint.total_states(), Rational(0));
      for (std::size_t c = 0; c < vertex.size(); ++c) {
        ambient[latest.system.column_labels[c]] = vertex[c];
      }
      if (!seen_vertices.insert(std::move(ambient)).second) {
        throw std::logic_error("SFMI polytopes share a vertex");
      }
    }

    std::size_t pos = choice.size();
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (++choice[pos] < pair_codes.size()) {
        advanced = true;
        break;
      }
      choice[pos] = 0;
    }
    if (!advanced) break;
  }
  return out;
}

bool centroid_is_blockMI_maximizer(const SfmiPolytope& polytope) {
  oplog::note("maximizer_atlas.centroid_is_blockMI_maximizer");
  const Distribution& centroid = polytope.centroid;
  const int N = polytope.N;
  const int n = polytope.n;
  const std::size_t expected_support = polytope.support.size();

  const std::vector<std::size_t> support = centroid.support();
  if (support.size() != expected_support) return false;
  const Rational share(1, static_cast<unsigned long>(expected_support));
  for (std::size_t s : support) {
    if (centroid.exact_weight(s) != share) return false;
  }

  // As an N^n-ary code of length 2, the support must have minimum distance
  // 2: all x-halves distinct and all y-halves distinct.
  std::set<std::vector<int>> x_halves;
  std::set<std::vector<int>> y_halves;
  for (std::size_t s : support) {
    const std::vector<int> state = centroid.space().state_of(s);
    x_halves.insert(std::vector<int>(state.begin(), state.begin() + n));
    y_halves.insert(std::vector<int>(state.begin() + n, state.end()));
  }
  if (x_halves.size() != support.size() || y_halves.size() != support.size()) {
    return false;
  }

  const double mi =
      block_mutual_information(centroid, BlockSplit::halves(2 * n));
  return std::abs(mi - n * std::log(static_cast<double>(N))) < 1e-10;
}

}  // namespace factored_info
