#pragma once

#include <cstdint>
#include <vector>

#include "factored_info/codes.hpp"
#include "factored_info/exact_polytope.hpp"

namespace factored_info {

// Exact enumeration of a maximizer set of one of the base measures.
struct MaximizerSet {
  enum class Kind { multi_information, block_mi };

  Kind kind;
  std::vector<Distribution> distributions;  // exact

  bool contains(const Distribution& p) const;
};

// The maximizers of the multi-information of n N-ary variables: uniform
// distributions on the N!^{n-1} maximal-distance codes.
MaximizerSet enumerate_I_maximizers(int N, int n, std::uint64_t cap = 100000);

// The maximizers of MI(X,Y) for two N-ary vectors of length n: one uniform
// distribution per permutation of the N^n composite states; N^n! of them.
MaximizerSet enumerate_blockMI_maximizers(int N, int n,
                                          std::uint64_t cap = 100000);

// Exact membership test: uniform on a support of cardinality N whose states
// are pairwise at full Hamming distance. Requires an exact distribution on
// a homogeneous space.
bool is_I_maximizer(const Distribution& p);

// One SFMI-maximizer transportation polytope: the joint distributions of
// (x_1..x_n, y_1..y_n) whose (X_i, Y_{pi(i)}) margin equals the uniform
// distribution on margin_codes[i], for every i.
struct SfmiPolytope {
  int N = 0;
  int n = 0;
  std::vector<Code> margin_codes;  // one length-2 code per pair
  Pairing pairing;

  std::vector<std::size_t> support;  // N^n joint states, ascending
  ConstraintSystem system;
  PolytopeReport report;

  // Indices into report.vertices of the vertices that are multi-information
  // maximizers (support of cardinality N).
  std::vector<std::size_t> code_vertices;

  // Vertex-index groups: (N-1)!^{n-1} simplices of N^{n-1} code vertices
  // with pairwise disjoint supports and a common centroid.
  std::vector<std::vector<std::size_t>> simplices;

  // Uniform distribution over the support; the common simplex centroid.
  Distribution centroid;

  Distribution vertex_distribution(std::size_t vertex_index) const;
};

SfmiPolytope build_sfmi_polytope(int N, int n,
                                 const std::vector<Code>& margin_choice,
                                 const Pairing& pairing);

// One polytope per margin-choice tuple, N!^n in total, in lexicographic
// order of the per-pair code indices. Verifies pairwise support
// disjointness. Throws cap_exceeded beyond `cap` polytopes.
std::vector<SfmiPolytope> enumerate_sfmi_polytopes(int N, int n,
                                                   const Pairing& pairing,
                                                   std::uint64_t cap = 10000);

// Exact structural check that the centroid maximizes MI(X,Y): uniform on
// N^n states whose x-halves are pairwise distinct and whose y-halves are
// pairwise distinct; also confirms block MI = n log N within 1e-10.
bool centroid_is_blockMI_maximizer(const SfmiPolytope& polytope);

}  // namespace factored_info
