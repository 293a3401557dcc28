// Command-line surface for the factored-information toolkit: measure
// evaluation, SFMI maximizer atlases, code/partition dumps, raw margin
// specification solving, numeric maximization, and the built-in
// verification scenarios.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "factored_info/codes.hpp"
#include "factored_info/exact_polytope.hpp"
#include "factored_info/json_io.hpp"
#include "factored_info/maximizer_atlas.hpp"
#include "factored_info/measures.hpp"
#include "factored_info/numeric_search.hpp"
#include "factored_info/scenarios.hpp"

namespace fi = factored_info;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

fi::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  fi::Json j;
  try {
    in >> j;
  } catch (const fi::Json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return j;
}

void emit(const fi::Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::invalid_argument("cannot write file: " + out_path);
  }
  out << j.dump(2) << "\n";
}

std::string format_number(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

// Flattens a report into "key: value" lines for --format table.
void print_table(const fi::Json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      print_table(value, prefix.empty() ? key : prefix + "." + key);
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) {
      print_table(value, prefix + "[" + std::to_string(i++) + "]");
    }
  } else if (j.is_number_float()) {
    std::cout << prefix << ": " << format_number(j.get<double>()) << "\n";
  } else {
    std::cout << prefix << ": " << j.dump() << "\n";
  }
}

void emit_formatted(const fi::Json& j, const std::string& out_path,
                    const std::string& format) {
  if (format == "table" && out_path.empty()) {
    print_table(j);
    return;
  }
  emit(j, out_path);
}

double display_value(double nats, const std::string& base) {
  return base == "2" ? nats / std::log(2.0) : nats;
}

int cmd_measure(const std::string& dist_path, const std::string& measure_name,
                const std::string& family_path, const std::string& pairing_path,
                const std::string& split_path, const std::string& base,
                const std::string& format) {
  const fi::Distribution p = fi::distribution_from_json(load_json(dist_path));
  const int n = p.space().variable_count();

  fi::Json report;
  report["measure"] = measure_name;
  report["base"] = base;
  report["cardinalities"] = p.space().cardinalities();

  fi::Json marginals = fi::Json::array();
  for (int i = 0; i < n; ++i) {
    marginals.push_back({{"variable", i + 1},
                         {"distribution",
                          fi::distribution_to_json(fi::marginal(p, {i}))}});
  }
  report["unary_marginals"] = std::move(marginals);

  if (measure_name == "I") {
    report["value"] = display_value(fi::multi_information(p), base);
  } else if (measure_name == "MI") {
    fi::BlockSplit split = split_path.empty()
                               ? fi::BlockSplit::halves(n)
                               : fi::split_from_json(load_json(split_path), n);
    report["value"] = display_value(fi::block_mutual_information(p, split),
                                    base);
    fi::Json split_json;
    split_json["x"] = fi::Json::array();
    for (int v : split.x_block) split_json["x"].push_back(v + 1);
    split_json["y"] = fi::Json::array();
    for (int v : split.y_block) split_json["y"].push_back(v + 1);
    report["split"] = std::move(split_json);
  } else if (measure_name == "FMI") {
    report["value"] = display_value(fi::fmi(p), base);
    fi::Json terms = fi::Json::array();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const fi::Distribution margin = fi::marginal(p, {i, j});
        terms.push_back({{"pair", {i + 1, j + 1}},
                         {"mi", display_value(fi::multi_information(margin),
                                              base)},
                         {"margin", fi::distribution_to_json(margin)}});
      }
    }
    report["terms"] = std::move(terms);
  } else if (measure_name == "SFMI") {
    if (n % 2 != 0) {
      throw std::invalid_argument("SFMI needs an even variable count");
    }
    const fi::Pairing pairing =
        pairing_path.empty() ? fi::Pairing::identity(n / 2)
                             : fi::pairing_from_json(load_json(pairing_path));
    report["value"] = display_value(fi::sfmi(p, pairing), base);
    report["pairing"] = fi::pairing_to_json(pairing);
    fi::Json terms = fi::Json::array();
    for (int i = 0; i < n / 2; ++i) {
      const int j = n / 2 + pairing.image(i);
      const fi::Distribution margin = fi::marginal(p, {i, j});
      terms.push_back({{"pair", {i + 1, j + 1}},
                       {"mi", display_value(fi::multi_information(margin),
                                            base)},
                       {"margin", fi::distribution_to_json(margin)}});
    }
    report["terms"] = std::move(terms);
  } else if (measure_name == "I_lambda") {
    if (family_path.empty()) {
      throw std::invalid_argument("I_lambda needs --family");
    }
    const fi::MarginFamily family =
        fi::family_from_json(load_json(family_path));
    report["value"] = display_value(fi::i_lambda(p, family), base);
    report["family"] = fi::family_to_json(family);
    fi::Json terms = fi::Json::array();
    for (const auto& set : family.sets()) {
      const fi::Distribution margin = fi::marginal(p, set);
      const double value =
          set.size() < 2 ? 0.0 : fi::multi_information(margin);
      fi::Json indices = fi::Json::array();
      for (int v : set) indices.push_back(v + 1);
      terms.push_back({{"set", std::move(indices)},
                       {"i", display_value(value, base)},
                       {"margin", fi::distribution_to_json(margin)}});
    }
    report["terms"] = std::move(terms);
  } else {
    throw std::invalid_argument("unknown measure: " + measure_name);
  }

  emit_formatted(report, "", format);
  return kExitOk;
}

int cmd_atlas(int N, int n, const std::string& pairing_path,
              const std::string& margins, const std::string& out_path,
              const std::string& format) {
  const fi::Pairing pairing =
      pairing_path.empty() ? fi::Pairing::identity(n)
                           : fi::pairing_from_json(load_json(pairing_path));

  fi::Json report;
  report["N"] = N;
  report["n"] = n;
  report["pairing"] = fi::pairing_to_json(pairing);

  std::vector<fi::SfmiPolytope> polytopes;
  if (!margins.empty()) {
    // A single polytope for an explicit margin choice: comma-separated
    // indices into the pair-code enumeration.
    const auto codes = fi::enumerate_max_distance_codes(N, 2);
    std::vector<fi::Code> choice;
    std::stringstream ss(margins);
    std::string token;
    while (std::getline(ss, token, ',')) {
      const std::size_t index = std::stoul(token);
      if (index >= codes.size()) {
        throw std::invalid_argument("margin code index out of range: " +
                                    token);
      }
      choice.push_back(codes[index]);
    }
    polytopes.push_back(fi::build_sfmi_polytope(N, n, choice, pairing));
  } else {
    polytopes = fi::enumerate_sfmi_polytopes(N, n, pairing);
  }

  fi::Json entries = fi::Json::array();
  std::size_t code_vertex_total = 0;
  bool all_centroids_maximize = true;
  for (const fi::SfmiPolytope& poly : polytopes) {
    entries.push_back(fi::sfmi_polytope_to_json(poly));
    code_vertex_total += poly.code_vertices.size();
    if (!fi::centroid_is_blockMI_maximizer(poly)) {
      all_centroids_maximize = false;
    }
  }
  report["polytopes"] = std::move(entries);
  report["summary"] = {
      {"polytope_count", polytopes.size()},
      {"affine_dimension", polytopes.empty()
                               ? -1
                               : polytopes.front().report.affine_dimension},
      {"code_vertices_total", code_vertex_total},
      {"simplices_per_polytope",
       polytopes.empty() ? 0 : polytopes.front().simplices.size()},
      {"centroids_maximize_block_mi", all_centroids_maximize},
  };
  emit_formatted(report, out_path, format);
  return kExitOk;
}

int cmd_verify(const std::string& scenario, bool all, bool list) {
  if (list) {
    for (const std::string& name : fi::scenario_names()) {
      std::cout << name << "\n";
    }
    return kExitOk;
  }
  std::vector<fi::ScenarioResult> results;
  if (all) {
    results = fi::run_all_scenarios();
  } else if (!scenario.empty()) {
    results.push_back(fi::run_scenario(scenario));
  } else {
    throw std::invalid_argument("verify needs --scenario NAME or --all");
  }

  bool ok = true;
  for (const fi::ScenarioResult& result : results) {
    for (const fi::CheckLine& check : result.checks) {
      std::cout << (check.passed ? "PASS" : "FAIL") << "  [" << result.name
                << "] " << check.label;
      if (!check.passed && !check.detail.empty()) {
        std::cout << "  (" << check.detail << ")";
      }
      std::cout << "\n";
      ok = ok && check.passed;
    }
  }
  std::cout << (ok ? "VERIFIED" : "FAILED") << "\n";
  return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_optimize(const std::string& measure_name, int N, int n,
                 const std::string& family_path,
                 const std::string& pairing_path,
                 const std::string& config_path, const std::string& out_path,
                 const std::string& format) {
  fi::SearchConfig config;
  if (!config_path.empty()) {
    config = fi::search_config_from_json(load_json(config_path));
  }

  std::optional<fi::Measure> measure;
  fi::StateSpace space = fi::StateSpace::homogeneous(1, 1);
  std::optional<fi::MaximizerSet> match;

  if (measure_name == "I") {
    measure = fi::Measure::multi_information();
    space = fi::StateSpace::homogeneous(n, N);
  } else if (measure_name == "FMI") {
    measure = fi::Measure::fmi();
    space = fi::StateSpace::homogeneous(n, N);
  } else if (measure_name == "SFMI") {
    const fi::Pairing pairing =
        pairing_path.empty() ? fi::Pairing::identity(n)
                             : fi::pairing_from_json(load_json(pairing_path));
    measure = fi::Measure::sfmi(pairing);
    space = fi::StateSpace::homogeneous(2 * n, N);
  } else if (measure_name == "I_lambda") {
    if (family_path.empty()) {
      throw std::invalid_argument("I_lambda needs --family");
    }
    const fi::MarginFamily family =
        fi::family_from_json(load_json(family_path));
    space = fi::StateSpace::homogeneous(family.variable_count(), N);
    measure = fi::Measure::i_lambda(family);
  } else {
    throw std::invalid_argument("unknown measure: " + measure_name);
  }

  if (measure_name == "I" || measure_name == "FMI") {
    // Match against the exact maximizer set when it is small enough.
    try {
      match = fi::enumerate_I_maximizers(N, space.variable_count());
    } catch (const fi::cap_exceeded&) {
      match.reset();
    }
  }

  const fi::SearchResult result = fi::maximize_measure(
      *measure, space, config, match ? &*match : nullptr);

  fi::Json report = fi::search_result_to_json(result);
  report["measure"] = measure->name();
  report["config"] = fi::search_config_to_json(config);
  report["expected_max"] = measure->max_value(space);
  emit_formatted(report, out_path, format);
  return kExitOk;
}

int cmd_codes(int N, int n, bool partitions, bool matchings,
              const std::string& out_path, const std::string& format) {
  fi::Json report;
  report["N"] = N;
  report["n"] = n;
  const auto codes = fi::enumerate_max_distance_codes(N, n);
  report["code_count"] = codes.size();
  fi::Json code_list = fi::Json::array();
  for (const fi::Code& code : codes) code_list.push_back(fi::code_to_json(code));
  report["codes"] = std::move(code_list);

  if (partitions) {
    const auto all = fi::enumerate_all_partitions(N, n);
    report["partition_count"] = all.size();
    fi::Json partition_list = fi::Json::array();
    for (const fi::CodePartition& partition : all) {
      partition_list.push_back(fi::partition_to_json(partition));
    }
    report["partitions"] = std::move(partition_list);
    report["canonical_partition"] =
        fi::partition_to_json(fi::partition_into_codes(N, n));
  }
  if (matchings) {
    fi::Json matching_list = fi::Json::array();
    for (const auto& matching : fi::bipartite_matchings_partition(N)) {
      fi::Json edges = fi::Json::array();
      for (const auto& [u, v] : matching) edges.push_back({u, v});
      matching_list.push_back(std::move(edges));
    }
    report["bipartite_matchings"] = std::move(matching_list);
  }
  emit_formatted(report, out_path, format);
  return kExitOk;
}

int cmd_polytope(const std::string& space_spec, const std::string& family_path,
                 const std::vector<std::string>& margin_paths,
                 const std::string& out_path, const std::string& format) {
  std::vector<int> cards;
  std::stringstream ss(space_spec);
  std::string token;
  while (std::getline(ss, token, ',')) cards.push_back(std::stoi(token));
  const fi::StateSpace space(cards);

  const fi::MarginFamily family = fi::family_from_json(load_json(family_path));
  std::vector<fi::Distribution> margins;
  for (const std::string& path : margin_paths) {
    margins.push_back(fi::distribution_from_json(load_json(path)));
  }
  const fi::MarginSpecifiedPolytope polytope =
      fi::margin_specified_polytope(space, family, margins);

  fi::Json report = fi::margin_polytope_to_json(polytope, space);
  report["family"] = fi::family_to_json(family);
  emit_formatted(report, out_path, format);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factored_info: multi-information measures, their exact "
               "maximizer atlases, and a numeric cross-check"};
  app.require_subcommand(1);

  std::string dist_path, measure_name, family_path, pairing_path, split_path;
  std::string base = "e", format = "json", out_path, margins, scenario;
  std::string space_spec;
  std::vector<std::string> margin_paths;
  int N = 2, n = 2;
  bool all = false, list = false, partitions = false, matchings = false;
  std::string config_path;

  CLI::App* measure = app.add_subcommand("measure", "evaluate a measure");
  measure->add_option("--dist", dist_path, "distribution JSON file")
      ->required();
  measure->add_option("--measure", measure_name,
                      "one of I, MI, FMI, SFMI, I_lambda")
      ->required();
  measure->add_option("--family", family_path, "margin family JSON file");
  measure->add_option("--pairing", pairing_path, "pairing JSON file");
  measure->add_option("--split", split_path, "block split JSON file");
  measure->add_option("--base", base, "logarithm base for display: e or 2")
      ->check(CLI::IsMember({"e", "2"}));
  measure->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* atlas = app.add_subcommand("atlas", "SFMI maximizer atlas");
  atlas->add_option("--N", N, "alphabet size")->required();
  atlas->add_option("--n", n, "number of pairs")->required();
  atlas->add_option("--pairing", pairing_path, "pairing JSON file");
  atlas->add_option("--margins", margins,
                    "comma-separated margin code indices (one polytope)");
  atlas->add_option("--out", out_path, "output file (default stdout)");
  atlas->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* verify = app.add_subcommand("verify", "run verification scenarios");
  verify->add_option("--scenario", scenario, "scenario name");
  verify->add_flag("--all", all, "run every scenario");
  verify->add_flag("--list", list, "list scenario names");

  CLI::App* optimize = app.add_subcommand("optimize", "numeric maximization");
  optimize->add_option("--measure", measure_name,
                       "one of I, FMI, SFMI, I_lambda")
      ->required();
  optimize->add_option("--N", N, "alphabet size")->required();
  optimize->add_option("--n", n, "variables (pairs for SFMI)");
  optimize->add_option("--family", family_path, "margin family JSON file");
  optimize->add_option("--pairing", pairing_path, "pairing JSON file");
  optimize->add_option("--config", config_path, "search config JSON file");
  optimize->add_option("--out", out_path, "output file (default stdout)");
  optimize->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* codes = app.add_subcommand("codes", "max-distance code dumps");
  codes->add_option("--N", N, "alphabet size")->required();
  codes->add_option("--n", n, "string length")->required();
  codes->add_flag("--partitions", partitions, "include partitions");
  codes->add_flag("--matchings", matchings, "include bipartite matchings");
  codes->add_option("--out", out_path, "output file (default stdout)");
  codes->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  CLI::App* polytope =
      app.add_subcommand("polytope", "raw margin-specification solving");
  polytope->add_option("--space", space_spec,
                       "comma-separated cardinalities, e.g. 2,2,2")
      ->required();
  polytope->add_option("--family", family_path, "margin family JSON file")
      ->required();
  polytope->add_option("--margins", margin_paths,
                       "margin distribution JSON files, in family order")
      ->required();
  polytope->add_option("--out", out_path, "output file (default stdout)");
  polytope->add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (measure->parsed()) {
      return cmd_measure(dist_path, measure_name, family_path, pairing_path,
                         split_path, base, format);
    }
    if (atlas->parsed()) {
      return cmd_atlas(N, n, pairing_path, margins, out_path, format);
    }
    if (verify->parsed()) {
      return cmd_verify(scenario, all, list);
    }
    if (optimize->parsed()) {
      return cmd_optimize(measure_name, N, n, family_path, pairing_path,
                          config_path, out_path, format);
    }
    if (codes->parsed()) {
      return cmd_codes(N, n, partitions, matchings, out_path, format);
    }
    if (polytope->parsed()) {
      return cmd_polytope(space_spec, family_path, margin_paths, out_path,
                          format);
    }
  } catch (const fi::cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
