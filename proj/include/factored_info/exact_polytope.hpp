#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "factored_info/distribution.hpp"
#include "factored_info/family.hpp"
#include "factored_info/rational.hpp"

namespace factored_info {

// Thrown when a combinatorial enumeration would exceed its configured cap.
// The message names the cap so callers can report it.
class cap_exceeded : public std::runtime_error {
 public:
  cap_exceeded(const std::string& cap_name, std::uint64_t requested,
               std::uint64_t cap);

  const std::string cap_name;
  const std::uint64_t requested;
  const std::uint64_t cap;
};

// Rank and a kernel basis of a rational matrix, by exact Gaussian
// elimination. Kernel vectors are the canonical RREF basis (one per free
// column, entry 1 at the free column).
struct RankKernel {
  int rank = 0;
  RationalMatrix kernel_basis;
};

RankKernel rational_rank_and_kernel(const RationalMatrix& matrix);

// Equality system M p = b over a column set labeled by joint-state indices;
// the polytope of interest is {p >= 0 : M p = b}. Support restriction (zero
// forcing) is applied upstream, so columns only cover states that can carry
// mass.
struct ConstraintSystem {
  RationalMatrix matrix;
  RationalVector rhs;
  std::vector<std::size_t> column_labels;

  std::size_t rows() const { return matrix.size(); }
  std::size_t columns() const { return column_labels.size(); }
};

// Exact analysis of one margin-constrained polytope.
//
// `affine_dimension` is the dimension of the affine solution set of the
// equality system (column count minus rank) before inequality cuts, or -1
// when the system is infeasible. Vertices are exact rational vectors in
// column coordinates, deduplicated and sorted.
struct PolytopeReport {
  int rank = 0;
  int affine_dimension = -1;
  RationalMatrix kernel_basis;
  RationalMatrix vertices;
  bool is_empty = true;
  bool is_point = false;
};

// All vertices of {p >= 0 : M p = b} by basic-feasible-solution
// enumeration over rank-sized column subsets. Exact; throws cap_exceeded
// when the system has more than `column_cap` columns.
RationalMatrix enumerate_vertices(const ConstraintSystem& system,
                                  std::size_t column_cap = 64);

// Rank, kernel, feasibility and vertex enumeration in one pass.
PolytopeReport analyze_polytope(const ConstraintSystem& system,
                                std::size_t column_cap = 64);

// The set of joint distributions realizing the specified margins: performs
// zero forcing (joint states whose lambda-restriction has margin
// probability zero are eliminated), builds the constraint system over the
// surviving states, and analyzes it. Margins must be exact and given in
// family order. An infeasible specification is a normal result
// (is_empty = true), not an error.
struct MarginSpecifiedPolytope {
  std::vector<std::size_t> support;  // surviving joint states, ascending
  ConstraintSystem system;
  PolytopeReport report;

  // Vertices as distributions over the ambient space.
  std::vector<Distribution> vertex_distributions(const StateSpace& space) const;
};

MarginSpecifiedPolytope margin_specified_polytope(
    const StateSpace& space, const MarginFamily& family,
    const std::vector<Distribution>& margins, std::size_t column_cap = 64);

}  // namespace factored_info
