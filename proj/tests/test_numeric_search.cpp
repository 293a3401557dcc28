#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "factored_info/numeric_search.hpp"
#include "oracles.hpp"

using namespace factored_info;

namespace {

constexpr double kLog2 = 0.6931471805599453;
constexpr double kLog3 = 1.0986122886681098;

Distribution random_interior(const StateSpace& space, std::mt19937& rng) {
  std::uniform_real_distribution<double> pick(0.05, 1.0);
  std::vector<double> w(space.total_states());
  double total = 0.0;
  for (double& v : w) {
    v = pick(rng);
    total += v;
  }
  for (double& v : w) v /= total;
  return Distribution::floating(space, std::move(w));
}

double relative_error(double got, double expected) {
  const double scale = std::max({std::abs(got), std::abs(expected), 1e-8});
  return std::abs(got - expected) / scale;
}

}  // namespace

TEST_CASE("gradient is constant on product distributions") {
  const StateSpace space = StateSpace::homogeneous(3, 2);
  const auto grad = multi_information_gradient(Distribution::uniform(space));
  for (double g : grad) CHECK(g == doctest::Approx(-2.0).epsilon(1e-12));

  const Distribution product = Distribution::floating(
      StateSpace::homogeneous(2, 2), {0.06, 0.24, 0.14, 0.56});
  for (double g : multi_information_gradient(product)) {
    CHECK(std::abs(g - (-1.0)) < 1e-10);
  }
}

TEST_CASE("gradient rejects boundary points") {
  const StateSpace pair = StateSpace::homogeneous(2, 2);
  CHECK_THROWS_AS(
      multi_information_gradient(Distribution::point_mass(pair, 0).to_float()),
      std::domain_error);
}

TEST_CASE("gradient matches central finite differences") {
  std::mt19937 rng(101);
  const StateSpace square = StateSpace::homogeneous(2, 2);
  for (int round = 0; round < 50; ++round) {
    const Distribution p = random_interior(square, rng);
    const auto grad = multi_information_gradient(p);
    const auto fd = test_oracles::fd_gradient(p.weights_as_double(), square,
                                              {{0, 1}});
    for (std::size_t i = 0; i < grad.size(); ++i) {
      CHECK(relative_error(grad[i], fd[i]) < 1e-6);
    }
  }
}

TEST_CASE("measure gradients match finite differences across measures") {
  std::mt19937 rng(103);
  struct Case {
    Measure measure;
    StateSpace space;
    std::vector<std::vector<int>> sets;
  };
  const std::vector<Case> cases = {
      {Measure::multi_information(), StateSpace::homogeneous(3, 2),
       {{0, 1, 2}}},
      {Measure::i_lambda(MarginFamily(3, {{0, 1}, {1, 2}})),
       StateSpace::homogeneous(3, 2),
       {{0, 1}, {1, 2}}},
      {Measure::fmi(), StateSpace::homogeneous(3, 2),
       {{0, 1}, {0, 2}, {1, 2}}},
      {Measure::sfmi(Pairing::identity(2)), StateSpace::homogeneous(4, 2),
       {{0, 2}, {1, 3}}},
  };
  for (const Case& c : cases) {
    CAPTURE(c.measure.name());
    for (int round = 0; round < 100; ++round) {
      const Distribution p = random_interior(c.space, rng);
      const auto grad = c.measure.gradient(p);
      const auto fd =
          test_oracles::fd_gradient(p.weights_as_double(), c.space, c.sets);
      for (std::size_t i = 0; i < grad.size(); ++i) {
        CHECK(relative_error(grad[i], fd[i]) < 1e-5);
      }
      // the value itself agrees with the raw-array oracle
      CHECK(std::abs(c.measure.value(p) -
                     test_oracles::raw_i_lambda(p.weights_as_double(),
                                                c.space, c.sets)) < 1e-10);
    }
  }
}

TEST_CASE("ascent is monotone in the iteration budget") {
  SearchConfig config;
  config.restarts = 1;
  config.seed = 11;
  const Measure measure = Measure::multi_information();
  const StateSpace space = StateSpace::homogeneous(2, 2);
  double previous = -1.0;
  for (int budget = 1; budget <= 40; budget += 3) {
    config.max_iterations = budget;
    const SearchResult result = maximize_measure(measure, space, config);
    CHECK(result.best_value >= previous - 1e-13);
    previous = result.best_value;
  }
}

TEST_CASE("iterates stay normalized and interior") {
  SearchConfig config;
  config.restarts = 3;
  config.max_iterations = 200;
  const SearchResult result = maximize_measure(
      Measure::multi_information(), StateSpace::homogeneous(2, 2), config);
  for (const RestartTrace& trace : result.restarts) {
    double sum = 0.0;
    for (double v : trace.final_point) {
      CHECK(v > 0.0);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
  CHECK(result.best_value ==
        doctest::Approx(
            Measure::multi_information().value(result.best_point))
            .epsilon(1e-12));
}

TEST_CASE("search is deterministic for a fixed seed") {
  SearchConfig config;
  config.restarts = 5;
  config.max_iterations = 300;
  const StateSpace space = StateSpace::homogeneous(2, 2);
  const SearchResult a =
      maximize_measure(Measure::multi_information(), space, config);
  const SearchResult b =
      maximize_measure(Measure::multi_information(), space, config);
  CHECK(a.best_value == b.best_value);
  REQUIRE(a.restarts.size() == b.restarts.size());
  for (std::size_t r = 0; r < a.restarts.size(); ++r) {
    CHECK(a.restarts[r].value == b.restarts[r].value);
    CHECK(a.restarts[r].iterations == b.restarts[r].iterations);
  }
}

TEST_CASE("attainment of the known maxima") {
  const SearchConfig config;

  const std::vector<std::tuple<int, int, double>> cases = {
      {2, 2, kLog2}, {2, 3, 2 * kLog2}, {3, 2, kLog3}};
  for (const auto& [N, n, bound] : cases) {
    CAPTURE(N);
    CAPTURE(n);
    const StateSpace space = StateSpace::homogeneous(n, N);
    const MaximizerSet maximizers = enumerate_I_maximizers(N, n);
    const SearchResult result = maximize_measure(
        Measure::multi_information(), space, config, &maximizers);
    CHECK(std::abs(result.best_value - bound) < 1e-5);
    CHECK(result.max_observed_value <= bound + 1e-9);
    REQUIRE(result.matched_maximizer.has_value());
    CHECK(result.matched_tv_distance < 1e-4);
    bool best_converged = false;
    for (const RestartTrace& trace : result.restarts) {
      if (trace.value == result.best_value && trace.converged) {
        best_converged = true;
      }
    }
    CHECK(best_converged);
  }

  // block MI via SFMI and FMI routes
  const SearchResult sfmi_result = maximize_measure(
      Measure::sfmi(Pairing::identity(2)), StateSpace::homogeneous(4, 2),
      config);
  CHECK(std::abs(sfmi_result.best_value - kLog2) < 1e-5);

  const SearchResult fmi_result = maximize_measure(
      Measure::fmi(), StateSpace::homogeneous(3, 2), config);
  CHECK(std::abs(fmi_result.best_value - kLog2) < 1e-5);
}

TEST_CASE("search configuration validation") {
  SearchConfig bad;
  bad.restarts = 0;
  CHECK_THROWS_AS(maximize_measure(Measure::multi_information(),
                                   StateSpace::homogeneous(2, 2), bad),
                  std::invalid_argument);
  SearchConfig negative_step;
  negative_step.step_size = -1.0;
  CHECK_THROWS_AS(maximize_measure(Measure::multi_information(),
                                   StateSpace::homogeneous(2, 2),
                                   negative_step),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      maximize_measure(Measure::sfmi(Pairing::identity(2)),
                       StateSpace::homogeneous(3, 2), SearchConfig{}),
      std::invalid_argument);
}

TEST_CASE("verify_theorem_fmi: connected covering") {
  const TheoremFmiReport report =
      verify_theorem_fmi(2, 3, MarginFamily(3, {{0, 1}, {1, 2}}),
                         SearchConfig{});
  CHECK(report.certificate.connected_covering);
  CHECK(report.combinations_tested == 4);
  CHECK(report.feasible_combinations == 4);
  CHECK(report.point_polytopes == 4);
  CHECK(report.points_matching_maximizer == 4);
  CHECK(report.converged_to_max >= 1);
  CHECK(report.matched_to_maximizer == report.converged_to_max);
  CHECK(std::abs(report.expected_max - kLog2) < 1e-12);
  CHECK(report.passed);

  // all pairs form a connected covering as well
  const TheoremFmiReport fmi_report =
      verify_theorem_fmi(2, 3, MarginFamily::all_pairs(3), SearchConfig{});
  CHECK(fmi_report.certificate.connected_covering);
  CHECK(fmi_report.passed);
}

TEST_CASE("verify_theorem_fmi: disconnected family") {
  const TheoremFmiReport report = verify_theorem_fmi(
      2, 4, MarginFamily(4, {{0, 1}, {2, 3}}), SearchConfig{});
  CHECK(!report.certificate.connected_covering);
  CHECK(report.max_affine_dimension == 1);
  REQUIRE(report.witness.has_value());
  CHECK(std::abs(report.witness_i_lambda - kLog2) < 1e-9);
  CHECK(std::abs(report.witness_multi_information - 2 * kLog2) < 1e-9);
  CHECK(report.witness_multi_information < 3 * kLog2 - 1e-6);
  CHECK(report.passed);
}

TEST_CASE("verify_theorem_fmi rejects singleton margins") {
  CHECK_THROWS_AS(
      verify_theorem_fmi(2, 2, MarginFamily(2, {{0, 1}, {1}}), SearchConfig{}),
      std::invalid_argument);
}
