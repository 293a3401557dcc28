#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "factored_info/family.hpp"
#include "factored_info/maximizer_atlas.hpp"

namespace factored_info {

// One of the maximizable measures: I, I_Lambda, FMI, or SFMI. All four are
// instances of I_Lambda; the kind only decides which family is built for a
// given space.
class Measure {
 public:
  static Measure multi_information();
  static Measure i_lambda(MarginFamily family);
  static Measure fmi();
  static Measure sfmi(Pairing pairing);

  double value(const Distribution& p) const;
  std::vector<double> gradient(const Distribution& p) const;

  // The concrete margin family for a space of n variables.
  MarginFamily family_for(const StateSpace& space) const;

  // Maximum attainable value over the simplex for homogeneous N-ary
  // variables: (1/|Lambda|) sum_lambda (|lambda|-1) log N.
  double max_value(const StateSpace& space) const;

  std::string name() const;

 private:
  enum class Kind { I, ILambda, Fmi, Sfmi };
  Measure(Kind kind, std::optional<MarginFamily> family,
          std::optional<Pairing> pairing);

  Kind kind_;
  std::optional<MarginFamily> family_;
  std::optional<Pairing> pairing_;
};

// Gradient of the multi-information at an interior point: component for
// state x is log(p(x) / prod_i p_i(x_i)) - (n - 1). Throws on zero entries.
std::vector<double> multi_information_gradient(const Distribution& p);

struct SearchConfig {
  int restarts = 50;
  int max_iterations = 5000;
  double step_size = 0.5;
  double convergence_tol = 1e-9;
  std::uint64_t seed = 34521;
};

struct RestartTrace {
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> final_point;
};

struct SearchResult {
  double best_value = 0.0;
  Distribution best_point;
  std::vector<RestartTrace> restarts;

  // Largest measure value seen at any iterate of any restart, including the
  // sampled starting points.
  double max_observed_value = 0.0;

  // Nearest enumerated maximizer, when a set was supplied.
  std::optional<std::size_t> matched_maximizer;
  double matched_tv_distance = 0.0;
};

// Exponentiated-gradient ascent over the probability simplex with random
// restarts. Iterates stay strictly interior; maximizers on the boundary are
// approached and reported by rounding distance. Deterministic for a fixed
// config (restart r uses PRNG stream (seed, r), independent of the worker
// thread count, which is capped by FACTORED_INFO_THREADS).
SearchResult maximize_measure(const Measure& measure, const StateSpace& space,
                              const SearchConfig& config,
                              const MaximizerSet* match_against = nullptr);

// Exact and numeric verification that maximizing I_Lambda recovers exactly
// the multi-information maximizers when the family is a connected covering,
// and strictly more otherwise.
struct TheoremFmiReport {
  CoveringCertificate certificate;

  // Exact side: margin-specification solving over every tuple of
  // margin-maximizer choices.
  int combinations_tested = 0;
  int feasible_combinations = 0;
  int point_polytopes = 0;
  int points_matching_maximizer = 0;
  int max_affine_dimension = 0;

  // Witness for the non-connected case: a feasible non-point polytope's
  // centroid, which attains the maximal I_Lambda but not the maximal I.
  std::optional<Distribution> witness;
  double witness_i_lambda = 0.0;
  double witness_multi_information = 0.0;

  // Numeric side.
  double expected_max = 0.0;
  double best_value = 0.0;
  int converged_to_max = 0;
  int matched_to_maximizer = 0;

  bool passed = false;
};

TheoremFmiReport verify_theorem_fmi(int N, int n, const MarginFamily& family,
                                    const SearchConfig& config);

}  // namespace factored_info
