#include "factored_info/exact_polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "factored_info/oplog.hpp"

namespace factored_info {

cap_exceeded::cap_exceeded(const std::string& name, std::uint64_t req,
                           std::uint64_t limit)
    : std::runtime_error("cap exceeded: " + name + " needs " +
                         std::to_string(req) + " but the cap is " +
                         std::to_string(limit)),
      cap_name(name),
      requested(req),
      cap(limit) {}

namespace {

struct Rref {
  RationalMatrix matrix;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form by exact Gauss-Jordan elimination. Pivot choice
// is the first nonzero entry in the column; there is no tolerance concept
// over the rationals.
Rref reduced_row_echelon(RationalMatrix m) {
  Rref result;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t candidate = pivot_row;
    while (candidate < rows && m[candidate][col] == 0) ++candidate;
    if (candidate == rows) continue;
    std::swap(m[pivot_row], m[candidate]);
    const Rational pivot = m[pivot_row][col];
    for (std::size_t c = col; c < cols; ++c) m[pivot_row][c] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        m[r][c] -= factor * m[pivot_row][c];
      }
    }
    result.pivot_columns.push_back(col);
    ++pivot_row;
  }
  result.matrix = std::move(m);
  return result;
}

// Unique solution of a square rational system, or nullopt when singular.
std::optional<RationalVector> solve_square(RationalMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t candidate = col;
    while (candidate < n && a[candidate][col] == 0) ++candidate;
    if (candidate == n) return std::nullopt;
    std::swap(a[col], a[candidate]);
    std::swap(b[col], b[candidate]);
    const Rational pivot = a[col][col];
    for (std::size_t c = col; c < n; ++c) a[col][c] /= pivot;
    b[col] /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  return b;
}

}  // namespace

RankKernel rational_rank_and_kernel(const RationalMatrix& matrix) {
  oplog::note("exact_polytope.rational_rank_and_kernel");
  if (matrix.empty() || matrix.front().empty()) {
    throw std::invalid_argument("rank/kernel of an empty matrix");
  }
  const std::size_t cols = matrix.front().size();
  for (const auto& row : matrix) {
    if (row.size() != cols) {
      throw std::invalid_argument("ragged matrix");
    }
  }
  const Rref rref = reduced_row_echelon(matrix);

  RankKernel out;
  out.rank = static_cast<int>(rref.pivot_columns.size());

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : rref.pivot_columns) is_pivot[c] = true;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    RationalVector v(cols, Rational(0));
    v[free_col] = 1;
    for (std::size_t k = 0; k < rref.pivot_columns.size(); ++k) {
      v[rref.pivot_columns[k]] = -rref.matrix[k][free_col];
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

RationalMatrix enumerate_vertices(const ConstraintSystem& system,
                                  std::size_t column_cap) {
  oplog::note("exact_polytope.enumerate_vertices");
  const std::size_t cols = system.columns();
  if (cols > column_cap) {
    throw cap_exceeded("vertex enumeration column count", cols, column_cap);
  }
  if (system.rhs.size() != system.rows()) {
    throw std::invalid_argument("rhs length must equal the row count");
  }
  if (cols == 0) return {};

  // Reduce the augmented system once; inconsistency means no solutions at
  // all, and the surviving pivot rows form an equivalent system.
  RationalMatrix augmented = system.matrix;
  for (std::size_t r = 0; r < augmented.size(); ++r) {
    augmented[r].push_back(system.rhs[r]);
  }
  const Rref rref = reduced_row_echelon(std::move(augmented));
  for (std::size_t c : rref.pivot_columns) {
    if (c == cols) return {};  // a row reduced to 0 = 1
  }
  const std::size_t rank = rref.pivot_columns.size();

  RationalMatrix reduced_rows(rref.matrix.begin(),
                              rref.matrix.begin() +
                                  static_cast<std::ptrdiff_t>(rank));

  std::set<RationalVector> vertices;
  if (rank == 0) {
    // No constraints: the origin is the only vertex of the orthant.
    vertices.insert(RationalVector(cols, Rational(0)));
  }

  // Basic feasible solutions: every vertex has its support inside some
  // rank-sized independent column set, so scanning all rank-subsets is
  // complete.
  std::vector<std::size_t> pick(rank);
  for (std::size_t i = 0; i < rank; ++i) pick[i] = i;
  auto next_combination = [&]() {
    std::size_t i = rank;
    while (i > 0) {
      --i;
      if (pick[i] + (rank - i) < cols) {
        ++pick[i];
        for (std::size_t k = i + 1; k < rank; ++k) pick[k] = pick[k - 1] + 1;
        return true;
      }
    }
    return false;
  };
  if (rank > 0) {
    do {
      RationalMatrix square(rank, RationalVector(rank));
      RationalVector rhs(rank);
      for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t k = 0; k < rank; ++k) {
          square[r][k] = reduced_rows[r][pick[k]];
        }
        rhs[r] = reduced_rows[r][cols];
      }
      if (auto solution = solve_square(std::move(square), std::move(rhs))) {
        bool nonnegative = true;
        for (const Rational& v : *solution) {
          if (v < 0) {
            nonnegative = false;
            break;
          }
        }
        if (nonnegative) {
          RationalVector vertex(cols, Rational(0));
          for (std::size_t k = 0; k < rank; ++k) {
            vertex[pick[k]] = (*solution)[k];
          }
          vertices.insert(std::move(vertex));
        }
      }
    } while (next_combination());
  }

  return RationalMatrix(vertices.begin(), vertices.end());
}

PolytopeReport analyze_polytope(const ConstraintSystem& system,
                                std::size_t column_cap) {
  PolytopeReport report;
  if (system.columns() == 0) {
    return report;  // empty by construction
  }
  const RankKernel rk = rational_rank_and_kernel(system.matrix);
  report.rank = rk.rank;
  report.kernel_basis = rk.kernel_basis;
  report.vertices = enumerate_vertices(system, column_cap);
  report.is_empty = report.vertices.empty();
  report.is_point = report.vertices.size() == 1;
  if (!report.is_empty) {
    report.affine_dimension =
        static_cast<int>(system.columns()) - report.rank;
  }
  return report;
}

std::vector<Distribution> MarginSpecifiedPolytope::vertex_distributions(
    const StateSpace& space) const {
  std::vector<Distribution> out;
  for (const RationalVector& vertex : report.vertices) {
    RationalVector weights(space.total_states(), Rational(0));
    for (std::size_t k = 0; k < vertex.size(); ++k) {
      weights[system.column_labels[k]] = vertex[k];
    }
    out.push_back(Distribution::exact(space, std::move(weights)));
  }
  return out;
}

MarginSpecifiedPolytope margin_specified_polytope(
    const StateSpace& space, const MarginFamily& family,
    const std::vector<Distribution>& margins, std::size_t column_cap) {
  oplog::note("exact_polytope.margin_specified_polytope");
  if (family.variable_count() != space.variable_count()) {
    throw std::invalid_argument("family does not match the state space");
  }
  if (family.size() == 0) {
    throw std::invalid_argument("margin specification needs at least one set");
  }
  if (margins.size() != family.size()) {
    throw std::invalid_argument("need exactly one margin per family set");
  }
  const auto& sets = family.sets();
  std::vector<StateSpace> subspaces;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    subspaces.push_back(space.subspace(sets[k]));
    if (!margins[k].is_exact()) {
      throw std::invalid_argument("margin specifications must be exact");
    }
    if (margins[k].space() != subspaces.back()) {
      throw std::invalid_argument("margin " + std::to_string(k) +
                                  " lives on the wrong marginal space");
    }
  }

  MarginSpecifiedPolytope result;

  // Zero forcing: a joint state survives only if every margin puts mass on
  // its restriction.
  std::vector<std::vector<std::size_t>> restriction(
      sets.size(), std::vector<std::size_t>(space.total_states()));
  for (std::size_t x = 0; x < space.total_states(); ++x) {
    const std::vector<int> state = space.state_of(x);
    bool survives = true;
    for (std::size_t k = 0; k < sets.size(); ++k) {
      std::vector<int> restricted(sets[k].size());
      for (std::size_t j = 0; j < sets[k].size(); ++j) {
        restricted[j] = state[static_cast<std::size_t>(sets[k][j])];
      }
      restriction[k][x] = subspaces[k].index_of(restricted);
      if (margins[k].exact_weight(restriction[k][x]) == 0) survives = false;
    }
    if (survives) result.support.push_back(x);
  }

  // One row per positive margin state; zero-valued margin states are fully
  // handled by the forcing above.
  for (std::size_t k = 0; k < sets.size(); ++k) {
    for (std::size_t s = 0; s < subspaces[k].total_states(); ++s) {
      const Rational& value = margins[k].exact_weight(s);
      if (value == 0) continue;
      RationalVector row(result.support.size(), Rational(0));
      for (std::size_t c = 0; c < result.support.size(); ++c) {
        if (restriction[k][result.support[c]] == s) row[c] = 1;
      }
      result.system.matrix.push_back(std::move(row));
      result.system.rhs.push_back(value);
    }
  }
  result.system.column_labels = result.support;

  if (result.support.empty()) {
    result.report = PolytopeReport{};
    return result;  // infeasible: every state was forced to zero
  }
  result.report = analyze_polytope(result.system, column_cap);
  return result;
}

}  // namespace factored_info
