#include "factored_info/numeric_search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "factored_info/oplog.hpp"

namespace factored_info {

namespace {

constexpr double kPositivityFloor = 1e-250;

int worker_thread_cap() {
  if (const char* env = std::getenv("FACTORED_INFO_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return std::min(parsed, 64);
  }
  return 1;
}

// Uniform double in (0,1) built from raw engine output, so streams are
// identical across standard library implementations.
double unit_uniform(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

std::vector<double> sample_interior_start(std::mt19937_64& rng,
                                          std::size_t states) {
  std::vector<double> p(states);
  double sum = 0.0;
  for (double& v : p) {
    v = -std::log(unit_uniform(rng));  // Dirichlet(1,...,1)
    sum += v;
  }
  for (double& v : p) v = std::max(v / sum, kPositivityFloor);
  double check = 0.0;
  for (double v : p) check += v;
  for (double& v : p) v /= check;
  return p;
}

double tv_distance(const std::vector<double>& p, const Distribution& q) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += std::abs(p[i] - q.weight(i));
  }
  return 0.5 * sum;
}

}  // namespace

Measure::Measure(Kind kind, std::optional<MarginFamily> family,
                 std::optional<Pairing> pairing)
    : kind_(kind), family_(std::move(family)), pairing_(std::move(pairing)) {}

Measure Measure::multi_information() {
  return Measure(Kind::I, std::nullopt, std::nullopt);
}

Measure Measure::i_lambda(MarginFamily family) {
  return Measure(Kind::ILambda, std::move(family), std::nullopt);
}

Measure Measure::fmi() { return Measure(Kind::Fmi, std::nullopt, std::nullopt); }

Measure Measure::sfmi(Pairing pairing) {
  return Measure(Kind::Sfmi, std::nullopt, std::move(pairing));
}

MarginFamily Measure::family_for(const StateSpace& space) const {
  const int n = space.variable_count();
  switch (kind_) {
    case Kind::I:
      return MarginFamily::full_set(n);
    case Kind::ILambda:
      if (family_->variable_count() != n) {
        throw std::invalid_argument("family does not match the state space");
      }
      return *family_;
    case Kind::Fmi:
      if (n < 2) {
        throw std::invalid_argument("FMI needs at least two variables");
      }
      return MarginFamily::all_pairs(n);
    case Kind::Sfmi:
      if (n != 2 * pairing_->pair_count()) {
        throw std::invalid_argument("SFMI pairing does not match the space");
      }
      if (!space.is_homogeneous()) {
        throw std::invalid_argument("SFMI requires homogeneous cardinalities");
      }
      return pairing_->as_family();
  }
  throw std::logic_error("unreachable");
}

double Measure::value(const Distribution& p) const {
  return factored_info::i_lambda(p, family_for(p.space()));
}

std::vector<double> Measure::gradient(const Distribution& p) const {
  const MarginFamily family = family_for(p.space());
  const StateSpace& space = p.space();
  std::vector<double> grad(space.total_states(), 0.0);
  for (const auto& set : family.sets()) {
    const Distribution sub = marginal(p, set);
    const std::vector<double> sub_grad = multi_information_gradient(sub);
    std::vector<int> restricted(set.size());
    for (std::size_t x = 0; x < grad.size(); ++x) {
      const std::vector<int> state = space.state_of(x);
      for (std::size_t k = 0; k < set.size(); ++k) {
        restricted[k] = state[static_cast<std::size_t>(set[k])];
      }
      grad[x] += sub_grad[sub.space().index_of(restricted)];
    }
  }
  for (double& g : grad) g /= static_cast<double>(family.size());
  return grad;
}

double Measure::max_value(const StateSpace& space) const {
  if (!space.is_homogeneous()) {
    throw std::invalid_argument("max_value needs a homogeneous space");
  }
  const double log_n = std::log(static_cast<double>(space.cardinality(0)));
  const MarginFamily family = family_for(space);
  double sum = 0.0;
  for (const auto& set : family.sets()) {
    sum += static_cast<double>(set.size() - 1) * log_n;
  }
  return sum / static_cast<double>(family.size());
}

std::string Measure::name() const {
  switch (kind_) {
    case Kind::I:
      return "I";
    case Kind::ILambda:
      return "I_lambda";
    case Kind::Fmi:
      return "FMI";
    case Kind::Sfmi:
      return "SFMI";
  }
  return "?";
}

std::vector<double> multi_information_gradient(const Distribution& p) {
  oplog::note("numeric_search.multi_information_gradient");
  const StateSpace& space = p.space();
  const int n = space.variable_count();
  const std::vector<double> weights = p.weights_as_double();

  std::vector<std::vector<double>> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    factors.push_back(marginal(p, {i}).weights_as_double());
  }
  std::vector<double> grad(weights.size());
  for (std::size_t x = 0; x < weights.size(); ++x) {
    if (weights[x] <= 0.0) {
      throw std::domain_error(
          "multi-information gradient needs a strictly interior point");
    }
    const std::vector<int> state = space.state_of(x);
    double log_product = 0.0;
    for (int i = 0; i < n; ++i) {
      log_product += std::log(factors[static_cast<std::size_t>(i)]
                                     [static_cast<std::size_t>(state[i])]);
    }
    grad[x] = std::log(weights[x]) - log_product -
              static_cast<double>(n - 1);
  }
  return grad;
}

namespace {

struct RestartOutcome {
  RestartTrace trace;
  double max_observed = 0.0;
};

RestartOutcome run_single_restart(const Measure& measure,
                                  const StateSpace& space,
                                  const SearchConfig& config, int restart) {
  std::seed_seq seq{static_cast<unsigned>(config.seed & 0xffffffffull),
                    static_cast<unsigned>(config.seed >> 32),
                    static_cast<unsigned>(restart)};
  std::mt19937_64 rng(seq);

  std::vector<double> p = sample_interior_start(rng, space.total_states());
  auto as_distribution = [&](const std::vector<double>& w) {
    return Distribution::floating(space, w);
  };

  RestartOutcome outcome;
  double current = measure.value(as_distribution(p));
  outcome.max_observed = current;

  int iteration = 0;
  for (; iteration < config.max_iterations; ++iteration) {
    const std::vector<double> grad = measure.gradient(as_distribution(p));
    double mean = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) mean += p[i] * grad[i];
    double tangent_norm_sq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double centered = grad[i] - mean;
      tangent_norm_sq += p[i] * centered * centered;
    }
    if (std::sqrt(tangent_norm_sq) < config.convergence_tol) {
      outcome.trace.converged = true;
      break;
    }

    const double grad_max = *std::max_element(grad.begin(), grad.end());
    double step = config.step_size;
    bool accepted = false;
    for (int halving = 0; halving <= 30; ++halving) {
      std::vector<double> q(p.size());
      double sum = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] = p[i] * std::exp(step * (grad[i] - grad_max));
        sum += q[i];
      }
      for (double& v : q) v = std::max(v / sum, kPositivityFloor);
      sum = 0.0;
      for (double v : q) sum += v;
      for (double& v : q) v /= sum;

      const double candidate = measure.value(as_distribution(q));
      outcome.max_observed = std::max(outcome.max_observed, candidate);
      if (candidate >= current - 1e-15) {
        p = std::move(q);
        current = candidate;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no ascent direction left at this scale
  }

  outcome.trace.value = current;
  outcome.trace.iterations = iteration;
  outcome.trace.final_point = std::move(p);
  return outcome;
}

}  // namespace

SearchResult maximize_measure(const Measure& measure, const StateSpace& space,
                              const SearchConfig& config,
                              const MaximizerSet* match_against) {
  oplog::note("numeric_search.maximize_measure");
  if (config.restarts < 1 || config.max_iterations < 1 ||
      config.step_size <= 0.0 || config.convergence_tol <= 0.0) {
    throw std::invalid_argument("search configuration must be positive");
  }
  measure.family_for(space);  // validate compatibility up front

  std::vector<RestartOutcome> outcomes(
      static_cast<std::size_t>(config.restarts));
  const int threads =
      std::min(worker_thread_cap(), config.restarts);
  if (threads <= 1) {
    for (int r = 0; r < config.restarts; ++r) {
      outcomes[static_cast<std::size_t>(r)] =
          run_single_restart(measure, space, config, r);
    }
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int r = next.fetch_add(1); r < config.restarts;
           r = next.fetch_add(1)) {
        outcomes[static_cast<std::size_t>(r)] =
            run_single_restart(measure, space, config, r);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::size_t best = 0;
  double max_observed = outcomes[0].max_observed;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].trace.value > outcomes[best].trace.value) best = r;
    max_observed = std::max(max_observed, outcomes[r].max_observed);
  }

  SearchResult result{
      outcomes[best].trace.value,
      Distribution::floating(space, outcomes[best].trace.final_point),
      {},
      max_observed,
      std::nullopt,
      0.0,
  };
  for (RestartOutcome& o : outcomes) {
    result.restarts.push_back(std::move(o.trace));
  }

  if (match_against != nullptr && !match_against->distributions.empty()) {
    const auto& point = result.restarts[best].final_point;
    std::size_t arg = 0;
    double min_tv = tv_distance(point, match_against->distributions[0]);
    for (std::size_t m = 1; m < match_against->distributions.size(); ++m) {
      const double tv = tv_distance(point, match_against->distributions[m]);
      if (tv < min_tv) {
        min_tv = tv;
        arg = m;
      }
    }
    result.matched_maximizer = arg;
    result.matched_tv_distance = min_tv;
  }
  return result;
}

TheoremFmiReport verify_theorem_fmi(int N, int n, const MarginFamily& family,
                                    const SearchConfig& config) {
  oplog::note("numeric_search.verify_theorem_fmi");
  const StateSpace space = StateSpace::homogeneous(n, N);
  if (space.total_states() > 64) {
    throw std::invalid_argument(
        "theorem verification is limited to small instances (N^n <= 64)");
  }
  if (family.variable_count() != n) {
    throw std::invalid_argument("family does not match the variable count");
  }
  if (family.size() == 0) {
    throw std::invalid_argument("theorem verification needs a nonempty family");
  }
  for (const auto& set : family.sets()) {
    if (set.size() < 2) {
      throw std::invalid_argument(
          "singleton margins leave the margin specification unconstrained");
    }
  }

  TheoremFmiReport report;
  report.certificate = is_connected_covering(family);

  const Measure measure = Measure::i_lambda(family);
  report.expected_max = measure.max_value(space);
  const double max_i =
      static_cast<double>(n - 1) * std::log(static_cast<double>(N));

  // Exact side: margin-specification solving over every tuple of
  // margin-maximizer choices.
  std::vector<MaximizerSet> per_set_choices;
  std::uint64_t combinations = 1;
  for (const auto& set : family.sets()) {
    per_set_choices.push_back(
        enumerate_I_maximizers(N, static_cast<int>(set.size())));
    combinations *= per_set_choices.back().distributions.size();
    if (combinations > 10000) {
      throw cap_exceeded("margin-maximizer combinations", combinations, 10000);
    }
  }

  const MaximizerSet maximizers = enumerate_I_maximizers(N, n);
  std::vector<std::size_t> choice(family.size(), 0);
  while (true) {
    std::vector<Distribution> margins;
    for (std::size_t k = 0; k < family.size(); ++k) {
      margins.push_back(per_set_choices[k].distributions[choice[k]]);
    }
    const MarginSpecifiedPolytope poly =
        margin_specified_polytope(space, family, margins);
    ++report.combinations_tested;
    if (!poly.report.is_empty) {
      ++report.feasible_combinations;
      report.max_affine_dimension =
          std::max(report.max_affine_dimension, poly.report.affine_dimension);
      if (poly.report.is_point) {
        ++report.point_polytopes;
        const Distribution point = poly.vertex_distributions(space).front();
        if (is_I_maximizer(point) && maximizers.contains(point)) {
          ++report.points_matching_maximizer;
        }
      } else if (!report.witness.has_value()) {
        // Centroid of the vertex set: preserves the specified margins, so
        // it attains the maximal I_Lambda, but its support is larger than
        // any multi-information maximizer's.
        RationalVector weights(space.total_states(), Rational(0));
        const Rational share(
            1, static_cast<unsigned long>(poly.report.vertices.size()));
        for (const RationalVector& vertex : poly.report.vertices) {
          for (std::size_t c = 0; c < vertex.size(); ++c) {
            weights[poly.system.column_labels[c]] += share * vertex[c];
          }
        }
        Distribution witness = Distribution::exact(space, std::move(weights));
        report.witness_i_lambda = i_lambda(witness, family);
        report.witness_multi_information = multi_information(witness);
        report.witness = std::move(witness);
      }
    }

    std::size_t pos = choice.size();
    bool advanced = false;
    while (pos > 0) {
      --pos;
      if (++choice[pos] < per_set_choices[pos].distributions.size()) {
        advanced = true;
        break;
      }
      choice[pos] = 0;
    }
    if (!advanced) break;
  }

  // Numeric side: every restart that reaches the maximal value must (in
  // the connected case) sit next to an enumerated maximizer.
  const SearchResult search =
      maximize_measure(measure, space, config, &maximizers);
  report.best_value = search.best_value;
  for (const RestartTrace& trace : search.restarts) {
    if (trace.value < report.expected_max - 1e-6) continue;
    ++report.converged_to_max;
    double min_tv = 2.0;
    for (const Distribution& m : maximizers.distributions) {
      min_tv = std::min(min_tv, tv_distance(trace.final_point, m));
    }
    if (min_tv < 1e-3) ++report.matched_to_maximizer;
  }

  const bool numeric_ok =
      report.best_value >= report.expected_max - 1e-5 &&
      report.converged_to_max >= 1;
  if (report.certificate.connected_covering) {
    report.passed = numeric_ok && report.feasible_combinations >= 1 &&
                    report.point_polytopes == report.feasible_combinations &&
                    report.points_matching_maximizer == report.point_polytopes &&
                    report.matched_to_maximizer == report.converged_to_max;
  } else {
    report.passed = numeric_ok && report.witness.has_value() &&
                    report.max_affine_dimension >= 1 &&
                    std::abs(report.witness_i_lambda - report.expected_max) <
                        1e-9 &&
                    report.witness_multi_information < max_i - 1e-6;
  }
  return report;
}

}  // namespace factored_info
