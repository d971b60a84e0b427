#include "simplex_lattice/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "simplex_lattice/io.hpp"
#include "simplex_lattice/labeling.hpp"
#include "simplex_lattice/lattice.hpp"
#include "simplex_lattice/oracle.hpp"
#include "simplex_lattice/verify.hpp"

namespace simplex_lattice::cli {

namespace {

constexpr int kMaxAllPiK = 8;

// Usage problem detected after CLI11 accepted the arguments.
struct UsageError {
  std::string message;
};

struct RunConfig {
  int k = 0;
  int q = 0;
  std::string pi;
  bool all_pi = false;
  int threshold = 2;
  std::string reading = "selected-index";
  std::string out_path;
  std::string format = "json";
  std::string labels_path;
  std::uint64_t budget = kDefaultOracleBudget;
  bool count_only = false;
  bool strict = false;
  std::size_t max_violations = kDefaultViolationCap;
};

Params validated_params(const RunConfig& config, int min_q = 1) {
  if (config.k < 3 || config.k > kMaxK) {
    throw UsageError{"--k: must be in [3, " + std::to_string(kMaxK) + "], got " + std::to_string(config.k)};
  }
  if (config.q < min_q || config.q > kMaxQ) {
    throw UsageError{"--q: must be in [" + std::to_string(min_q) + ", " + std::to_string(kMaxQ) +
                     "], got " + std::to_string(config.q)};
  }
  return Params(config.k, config.q);
}

std::optional<Permutation> validated_pi(const RunConfig& config, const Params& params) {
  if (config.pi.empty()) return std::nullopt;
  try {
    Permutation pi = Permutation::parse(config.pi);
    if (pi.size() != params.dimension()) {
      throw UsageError{"--pi: expected a permutation of 1.." + std::to_string(params.dimension()) +
                       ", got \"" + config.pi + "\""};
    }
    return pi;
  } catch (const InvalidPermutation& e) {
    throw UsageError{std::string("--pi: ") + e.what()};
  }
}

Reading validated_reading(const RunConfig& config) {
  return config.reading == "position" ? Reading::Position : Reading::SelectedIndex;
}

LabelRule builtin_rule(const std::optional<Permutation>& pi, Reading reading) {
  if (pi) return PiRule{*pi, reading};
  return IdentityRule{};
}

Labeling load_labels(const RunConfig& config, const Params& params) {
  std::ifstream in(config.labels_path, std::ios::binary);
  if (!in) throw UsageError{"--labels: cannot open \"" + config.labels_path + "\""};
  std::ostringstream bytes;
  bytes << in.rdbuf();
  try {
    Labeling labeling = read_labeling(bytes.str());
    if (labeling.params() != params) {
      throw UsageError{"--labels: file is for k=" + std::to_string(labeling.params().k()) +
                       ", q=" + std::to_string(labeling.params().q()) + " but --k/--q ask for k=" +
                       std::to_string(params.k()) + ", q=" + std::to_string(params.q())};
    }
    return labeling;
  } catch (const ParseError& e) {
    throw UsageError{"--labels: " + std::string(e.what())};
  }
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (config.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary);
  if (!file) throw UsageError{"--out: cannot write \"" + config.out_path + "\""};
  file << text;
}

int run_label(const RunConfig& config, std::ostream& out) {
  const Params params = validated_params(config, 0);
  const auto pi = validated_pi(config, params);
  const Labeling labeling = label_all(params, builtin_rule(pi, validated_reading(config)));
  emit(config, write_labeling(labeling, parse_format(config.format)), out);
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  const Params params = validated_params(config);
  const auto pi = validated_pi(config, params);
  const Reading reading = validated_reading(config);
  const CheckOptions options{.strict = config.strict};
  if (config.threshold < 1) throw UsageError{"--threshold: must be >= 1"};

  std::optional<Labeling> external;
  if (!config.labels_path.empty()) external = load_labels(config, params);

  if (config.all_pi) {
    if (params.k() > kMaxAllPiK) {
      throw UsageError{"--all-pi: refusing k > " + std::to_string(kMaxAllPiK) +
                       " ((k-1)! permutations); use --pi for a single permutation"};
    }
    std::vector<VerificationReport> reports;
    if (external) {
      for (const auto& p : Permutation::all(params.dimension())) {
        reports.push_back(check_labeling(*external, p, config.threshold, options));
      }
    } else {
      reports = check_all_pi(params, config.threshold, reading, options);
    }
    bool all_passed = true;
    Json list = Json::array();
    for (const auto& report : reports) {
      all_passed = all_passed && report.passed();
      list.push_back(report_to_json(report, config.max_violations));
    }
    Json doc;
    doc["k"] = params.k();
    doc["q"] = params.q();
    doc["threshold"] = config.threshold;
    doc["all_passed"] = all_passed;
    doc["reports"] = std::move(list);
    emit(config, to_text(doc), out);
    return all_passed ? kExitOk : kExitViolations;
  }

  const Labeling labeling = external ? *external : label_all(params, builtin_rule(pi, reading));
  const VerificationReport report = check_labeling(labeling, pi, config.threshold, options);
  emit(config, to_text(report_to_json(report, config.max_violations)), out);
  return report.passed() ? kExitOk : kExitViolations;
}

int run_facets(const RunConfig& config, std::ostream& out) {
  const Params params = validated_params(config);
  if (config.count_only) {
    emit(config, std::to_string(count_facets(params)) + "\n", out);
  } else {
    emit(config, to_text(facets_to_json(params, enumerate_facets(params))), out);
  }
  return kExitOk;
}

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Params params = validated_params(config);
  const auto pi = validated_pi(config, params);
  try {
    emit(config, to_text(oracle_to_json(min_max_colors(params, pi, config.budget))), out);
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    emit(config, to_text(oracle_to_json(e.partial())), out);
    err << "oracle: " << e.what() << " (raise --budget)\n";
    return kExitViolations;
  }
}

int run_render(const RunConfig& config, std::ostream& out) {
  const Params params = validated_params(config, 0);
  if (params.k() != 3) throw UsageError{"--k: render supports k = 3 only"};
  const auto pi = validated_pi(config, params);
  const Labeling labeling = config.labels_path.empty()
                                ? label_all(params, builtin_rule(pi, validated_reading(config)))
                                : load_labels(config, params);
  emit(config, render_svg(labeling), out);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simplex-lattice hypergraph labelings: construction, verification, exact search"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_kq = [&](CLI::App* sub) {
    sub->add_option("--k", config.k, "number of colors (points live in Z^{k-1})")->required();
    sub->add_option("--q", config.q, "dilation of the simplex")->required();
  };
  auto add_reading = [&](CLI::App* sub) {
    sub->add_option("--reading", config.reading, "permutation rule reading")
        ->check(CLI::IsMember({"selected-index", "position"}));
  };

  auto* label_cmd = app.add_subcommand("label", "write the built-in labeling of V_{k,q}");
  add_kq(label_cmd);
  label_cmd->add_option("--pi", config.pi, "permutation in one-line image notation, e.g. 2,1,3");
  add_reading(label_cmd);
  label_cmd->add_option("--out", config.out_path, "output file")->required();
  label_cmd->add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "check Sperner-admissibility and colors per hyperedge");
  add_kq(verify_cmd);
  auto* pi_opt = verify_cmd->add_option("--pi", config.pi, "check against E^pi with l^pi");
  auto* all_pi_opt = verify_cmd->add_flag("--all-pi", config.all_pi, "every permutation of S_{k-1}");
  pi_opt->excludes(all_pi_opt);
  verify_cmd->add_option("--threshold", config.threshold, "maximum allowed colors per hyperedge");
  verify_cmd->add_option("--labels", config.labels_path, "external labeling file (json or csv)");
  add_reading(verify_cmd);
  verify_cmd->add_flag("--strict", config.strict, "also walk cells of inconsistent (v, pi) pairs");
  verify_cmd->add_option("--max-violations", config.max_violations, "violations listed per report");
  verify_cmd->add_option("--out", config.out_path, "write the report here instead of stdout");

  auto* facets_cmd = app.add_subcommand("facets", "list the facets of the edgewise subdivision");
  add_kq(facets_cmd);
  facets_cmd->add_flag("--count-only", config.count_only, "print only the number of facets");
  facets_cmd->add_option("--out", config.out_path, "write here instead of stdout");

  auto* oracle_cmd = app.add_subcommand("oracle", "exact minimum of the max colors per hyperedge");
  add_kq(oracle_cmd);
  oracle_cmd->add_option("--pi", config.pi, "search against E^pi instead of E");
  oracle_cmd->add_option("--budget", config.budget, "search node limit");
  oracle_cmd->add_option("--out", config.out_path, "write here instead of stdout");

  auto* render_cmd = app.add_subcommand("render", "draw the labeled triangulation of V_{3,q} as SVG");
  add_kq(render_cmd);
  render_cmd->add_option("--pi", config.pi, "use l^pi instead of l");
  add_reading(render_cmd);
  render_cmd->add_option("--labels", config.labels_path, "render an external labeling");
  render_cmd->add_option("--out", config.out_path, "output .svg file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (label_cmd->parsed()) return run_label(config, out);
    if (verify_cmd->parsed()) return run_verify(config, out);
    if (facets_cmd->parsed()) return run_facets(config, out);
    if (oracle_cmd->parsed()) return run_oracle(config, out, err);
    if (render_cmd->parsed()) return run_render(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const LabelUndefined& e) {
    err << "error: " << e.what() << " (the labeling is only guaranteed total for q > k)\n";
    return kExitViolations;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace simplex_lattice::cli
