// Command-line front end: constructs star-derived arrays, expands them into
// Latin hypercube designs, evaluates distance criteria and runs replicated
// comparisons of generator assignments. Every run writes a manifest with the
// digests of all files read and written; identical invocations reproduce
// byte-identical outputs.
//
// Exit codes: 0 success, 2 validation failure, 3 infeasible construction.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "starlhd/starlhd.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_manifest(starlhd::RunManifest manifest, const std::filesystem::path& path) {
  starlhd::write_file_atomic(path, to_json(manifest).dump(2) + "\n");
}

struct ConstructOptions {
  int p = 0;
  int t = 0;
  int t0 = 0;
  std::string policy = "canonical";
  std::uint64_t seed = 0;
  std::uint64_t max_tries = 1'000'000;
  std::string out_dir = ".";
};

int run_construct(const ConstructOptions& opt) {
  const starlhd::Star star = starlhd::construct_star(opt.p, opt.t, opt.t0);

  starlhd::GeneratorAssignment gens = starlhd::canonical_assignment(star);
  if (opt.policy == "compliant") {
    const starlhd::SearchResult result =
        starlhd::search_compliant(star, opt.seed, opt.max_tries);
    if (!result.found()) {
      throw InfeasibleError(
          "no guideline-compliant assignment found (" +
          std::to_string(result.nodes_tried) + " nodes tried" +
          std::string(result.budget_exhausted ? ", budget exhausted" : ", search space exhausted") +
          "); retry with --policy canonical or a larger --max-tries");
    }
    gens = *result.assignment;
  } else if (opt.policy != "canonical") {
    throw std::invalid_argument("unknown --policy: " + opt.policy +
                                " (expected compliant or canonical)");
  }

  const starlhd::DesignArray array = starlhd::star_to_noa(star, gens);

  const std::filesystem::path dir = opt.out_dir;
  const auto star_path = dir / "star.json";
  const auto assignment_path = dir / "assignment.json";
  const auto array_path = dir / "noa.csv";
  starlhd::write_file_atomic(star_path, to_json(star).dump(2) + "\n");
  starlhd::write_file_atomic(assignment_path, to_json(gens).dump(2) + "\n");
  std::ostringstream csv;
  starlhd::write_design_array_csv(array, csv);
  starlhd::write_file_atomic(array_path, csv.str());

  starlhd::RunManifest manifest;
  manifest.command = "construct";
  manifest.parameters = {{"p", opt.p},
                         {"t", opt.t},
                         {"t0", opt.t0},
                         {"policy", opt.policy},
                         {"max_tries", opt.max_tries}};
  manifest.seeds = {{"search", opt.seed}};
  manifest.add_output(star_path.string());
  manifest.add_output(assignment_path.string());
  manifest.add_output(array_path.string());
  write_manifest(std::move(manifest), dir / "manifest.json");

  std::cout << "wrote " << array_path.string() << ": " << array.n_runs() << " runs, "
            << array.n_factors() << " factors, kind " << to_string(array.kind())
            << "\n";
  return 0;
}

struct LhdOptions {
  std::string array_path;
  std::string mode = "uniform";
  std::uint64_t seed = 0;
  std::string out = "lhd.csv";
};

int run_lhd(const LhdOptions& opt) {
  std::ifstream in(opt.array_path);
  if (!in) throw std::invalid_argument("cannot open array file " + opt.array_path);
  const starlhd::DesignArray array = starlhd::read_design_array_csv(in);

  const starlhd::PerturbMode mode = starlhd::perturb_mode_from_string(opt.mode);
  const std::uint64_t expand_seed = starlhd::derive_seed(opt.seed, 1, 0);
  const std::uint64_t perturb_seed = starlhd::derive_seed(opt.seed, 2, 0);
  const starlhd::LevelArray levels = starlhd::expand(array, expand_seed);
  const starlhd::Lhd design = starlhd::perturb(levels, mode, perturb_seed);

  const std::filesystem::path out_path = opt.out;
  std::ostringstream csv;
  starlhd::write_lhd_csv(design.points(), csv);
  starlhd::write_file_atomic(out_path, csv.str());

  starlhd::LhdProvenance provenance;
  provenance.source_array_digest = starlhd::fnv1a64_hex(read_file(opt.array_path));
  provenance.expand_seed = expand_seed;
  provenance.perturb_seed = perturb_seed;
  provenance.mode = opt.mode;
  const std::filesystem::path sidecar = out_path.string() + ".provenance.json";
  starlhd::write_file_atomic(sidecar, to_json(provenance).dump(2) + "\n");

  starlhd::RunManifest manifest;
  manifest.command = "lhd";
  manifest.parameters = {{"array", opt.array_path}, {"mode", opt.mode}};
  manifest.seeds = {{"master", opt.seed},
                    {"expand", expand_seed},
                    {"perturb", perturb_seed}};
  manifest.add_input(opt.array_path);
  manifest.add_output(out_path.string());
  manifest.add_output(sidecar.string());
  write_manifest(std::move(manifest),
                 out_path.parent_path() / (out_path.stem().string() + ".manifest.json"));

  std::cout << "wrote " << out_path.string() << ": " << design.n_runs() << " points in "
            << design.n_factors() << " dimensions (" << opt.mode << ")\n";
  return 0;
}

struct EvaluateOptions {
  std::string lhd_path;
  int k = 0;  // 0 = full dimension
  std::string format = "csv";
  std::string out;
};

int run_evaluate(const EvaluateOptions& opt) {
  std::ifstream in(opt.lhd_path);
  if (!in) throw std::invalid_argument("cannot open design file " + opt.lhd_path);
  const starlhd::RealMatrix points = starlhd::read_lhd_csv(in);
  const int d = static_cast<int>(points.front().size());
  const int k = opt.k == 0 ? d : opt.k;
  const std::vector<starlhd::DistanceSummary> rows =
      starlhd::projection_summary(points, k);

  std::string rendered;
  if (opt.format == "csv") {
    std::ostringstream csv;
    starlhd::write_projection_report_csv(rows, csv);
    rendered = csv.str();
  } else if (opt.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const starlhd::DistanceSummary& row : rows) {
      nlohmann::json columns = nlohmann::json::array();
      for (int c : row.columns) columns.push_back(c + 1);
      out.push_back({{"columns", columns}, {"mid", row.mid}, {"aid", row.aid}});
    }
    rendered = out.dump(2) + "\n";
  } else {
    throw std::invalid_argument("unknown --format: " + opt.format);
  }

  if (opt.out.empty()) {
    std::cout << rendered;
    return 0;
  }
  starlhd::write_file_atomic(opt.out, rendered);

  starlhd::RunManifest manifest;
  manifest.command = "evaluate";
  manifest.parameters = {{"lhd", opt.lhd_path}, {"k", k}, {"format", opt.format}};
  manifest.add_input(opt.lhd_path);
  manifest.add_output(opt.out);
  const std::filesystem::path out_path = opt.out;
  write_manifest(std::move(manifest),
                 out_path.parent_path() / (out_path.stem().string() + ".manifest.json"));
  std::cout << "wrote " << opt.out << ": " << rows.size() << " projection rows\n";
  return 0;
}

struct SimulateOptions {
  std::string config_path;
  std::string out_dir = ".";
};

starlhd::Star star_from_config(const nlohmann::json& config) {
  if (config.contains("rays")) {
    const int p = config.at("p").get<int>();
    std::vector<starlhd::Flat> rays;
    for (const auto& labels : config.at("rays")) {
      rays.push_back(starlhd::span_labels(p, labels.get<std::vector<std::string>>()));
    }
    return starlhd::star_from_rays(rays);
  }
  return starlhd::construct_star(config.at("p").get<int>(), config.at("t").get<int>(),
                                 config.at("t0").get<int>());
}

int run_simulate(const SimulateOptions& opt) {
  nlohmann::json config;
  {
    std::ifstream in(opt.config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + opt.config_path);
    in >> config;
  }
  const starlhd::Star star = star_from_config(config.at("star"));
  const auto n_reps = config.value("reps", std::uint64_t{100});
  const auto seed = config.value("seed", std::uint64_t{0});

  std::vector<starlhd::LabeledAssignment> configurations;
  for (const auto& entry : config.at("assignments")) {
    configurations.push_back(
        {entry.at("label").get<std::string>(),
         starlhd::GeneratorAssignment::from_labels(
             star.p(), entry.at("generators").get<std::vector<std::vector<std::string>>>())});
  }

  const std::vector<starlhd::SimulationResult> results =
      starlhd::run_simulation(star, configurations, n_reps, seed);

  const std::filesystem::path dir = opt.out_dir;
  std::ostringstream samples;
  starlhd::write_simulation_samples_csv(results, samples);
  starlhd::write_file_atomic(dir / "samples.csv", samples.str());
  std::ostringstream summary;
  starlhd::write_simulation_summary_csv(results, summary);
  starlhd::write_file_atomic(dir / "summary.csv", summary.str());

  starlhd::RunManifest manifest;
  manifest.command = "simulate";
  manifest.parameters = {{"config", opt.config_path}, {"reps", n_reps}};
  manifest.seeds = {{"master", seed}};
  manifest.add_input(opt.config_path);
  manifest.add_output((dir / "samples.csv").string());
  manifest.add_output((dir / "summary.csv").string());
  write_manifest(std::move(manifest), dir / "manifest.json");

  std::cout << "wrote " << (dir / "samples.csv").string() << ": "
            << results.size() * n_reps << " rows over " << results.size()
            << " configurations\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-filling Latin hypercube designs from spreads and covering stars of PG(p-1,2)"};
  app.set_version_flag("--version", std::string(starlhd::kVersion));
  app.require_subcommand(1);

  ConstructOptions construct_opt;
  CLI::App* construct = app.add_subcommand(
      "construct", "Build a covering star and its derived (nearly) orthogonal array");
  construct->add_option("-p,--p", construct_opt.p, "Number of base factors")->required();
  construct->add_option("-t,--t", construct_opt.t, "Ray rank")->required();
  construct->add_option("--t0", construct_opt.t0, "Nucleus rank")->required();
  construct->add_option("--policy", construct_opt.policy,
                        "Generator policy: canonical (construction bases) or "
                        "compliant (search for a G1-G3 compliant assignment)");
  construct->add_option("--seed", construct_opt.seed, "Search shuffle seed (0 = ascending order)");
  construct->add_option("--max-tries", construct_opt.max_tries, "Search node budget");
  construct->add_option("--out-dir", construct_opt.out_dir, "Output directory");

  LhdOptions lhd_opt;
  CLI::App* lhd = app.add_subcommand("lhd", "Expand a design array into a Latin hypercube design");
  lhd->add_option("--array", lhd_opt.array_path, "Design array CSV")->required();
  lhd->add_option("--mode", lhd_opt.mode, "Perturbation: uniform or midpoint");
  lhd->add_option("--seed", lhd_opt.seed, "Master seed");
  lhd->add_option("--out", lhd_opt.out, "Output CSV path");

  EvaluateOptions evaluate_opt;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Distance criteria of a design's projections");
  evaluate->add_option("--lhd", evaluate_opt.lhd_path, "Design CSV")->required();
  evaluate->add_option("-k,--k", evaluate_opt.k, "Projection size (default: all columns)");
  evaluate->add_option("--format", evaluate_opt.format, "Output format: csv or json");
  evaluate->add_option("--out", evaluate_opt.out, "Output path (default: stdout)");

  SimulateOptions simulate_opt;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Replicated MID/AID comparison of generator assignments");
  simulate->add_option("--config", simulate_opt.config_path, "Simulation config JSON")->required();
  simulate->add_option("--out-dir", simulate_opt.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (construct->parsed()) return run_construct(construct_opt);
    if (lhd->parsed()) return run_lhd(lhd_opt);
    if (evaluate->parsed()) return run_evaluate(evaluate_opt);
    if (simulate->parsed()) return run_simulate(simulate_opt);
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
