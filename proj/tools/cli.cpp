#include "rbfpielm/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "rbfpielm/config.hpp"
#include "rbfpielm/error.hpp"
#include "rbfpielm/pipeline.hpp"
#include "rbfpielm/report.hpp"
#include "rbfpielm/sweep.hpp"

namespace rbfpielm {

namespace {

struct Overrides {
  std::optional<std::string> preset;
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n_units;
  std::optional<double> sigma0;
  std::optional<double> sigmac;
  bool pai = true;
  CLI::Option* pai_opt = nullptr;
  bool clamped = false;
  std::optional<double> rcond;
  std::optional<std::string> grid;
  std::optional<std::string> out_dir;
  std::optional<int> threads;
  bool emit_matrix = false;
};

void add_common_options(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--preset", o.preset, "cavity | mms-k10 | mms-k20 | mms-custom");
  cmd.add_option("--config", o.config_path, "key = value configuration file");
  cmd.add_option("--seed", o.seed, "RNG seed for center placement");
  cmd.add_option("--n-units", o.n_units, "number of RBF units");
  cmd.add_option("--sigma0", o.sigma0, "width at the walls");
  cmd.add_option("--sigmac", o.sigmac, "width increase toward the center");
  o.pai_opt = cmd.add_flag("--pai,!--no-pai", o.pai, "physics-aware center placement (default on)");
  cmd.add_flag("--clamped", o.clamped, "also impose the exact normal derivative (mms presets)");
  cmd.add_option("--rcond", o.rcond, "relative SVD truncation threshold");
  cmd.add_option("--grid", o.grid, "collocation grid as <nx>x<ny>");
  cmd.add_option("--out", o.out_dir, "output directory");
  cmd.add_option("--threads", o.threads, "OpenMP thread bound (env RBF_PIELM_THREADS)");
  cmd.add_flag("--emit-matrix", o.emit_matrix, "dump A and b as system.rplm");
}

RunConfig build_config(const Overrides& o) {
  RunConfig cfg = o.config_path ? load_config(*o.config_path, o.preset) : preset_defaults(o.preset.value_or("cavity"));
  if (o.seed) cfg.pai.seed = *o.seed;
  if (o.n_units) cfg.pai.n_units = *o.n_units;
  if (o.sigma0) cfg.pai.sigma0 = *o.sigma0;
  if (o.sigmac) cfg.pai.sigmac = *o.sigmac;
  if (o.pai_opt && o.pai_opt->count() > 0) cfg.use_pai = o.pai;
  if (o.clamped) cfg.clamped = true;
  if (o.rcond) cfg.rcond = *o.rcond;
  if (o.grid) {
    const auto x = o.grid->find('x');
    try {
      if (x == std::string::npos) throw std::invalid_argument("");
      std::size_t used = 0;
      const std::string a = o.grid->substr(0, x);
      const std::string b = o.grid->substr(x + 1);
      cfg.grid_nx = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument("");
      cfg.grid_ny = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ConfigError("--grid expects <nx>x<ny>, got '" + *o.grid + "'");
    }
  }
  if (o.out_dir) cfg.output_dir = *o.out_dir;
  if (o.threads) {
    cfg.threads = *o.threads;
  } else if (const char* env = std::getenv("RBF_PIELM_THREADS"); env && *env) {
    apply_setting(cfg, "threads", env);
  }
  if (o.emit_matrix) cfg.emit_matrix = true;
  validate(cfg);
  return cfg;
}

void apply_threads(const RunConfig& cfg) {
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

void write_error_map(const Solution& solution, const MmsSpec& mms, int n, const std::filesystem::path& path) {
  const auto nodes = uniform_nodes(n);
  std::ostringstream out;
  out.precision(17);
  out << "x,y,abs_error\n";
  for (double y : nodes)
    for (double x : nodes) out << x << ',' << y << ',' << std::abs(solution.evaluate({x, y}) - mms.exact({x, y})) << '\n';
  write_text(path, out.str());
}

int cmd_solve(const Overrides& o, std::ostream& out) {
  const RunConfig cfg = build_config(o);
  apply_threads(cfg);
  std::filesystem::create_directories(cfg.output_dir);

  const RunResult result = run_pipeline(cfg, {.compute_error = true, .keep_system = cfg.emit_matrix});
  const auto& dir = cfg.output_dir;
  write_text(dir / "report.json", to_json_text(make_report(result)));
  if (cfg.emit_profiles) {
    const auto profiles = centerline_profiles(result.solution, cfg.profile_samples);
    write_profile_csv(profiles.u_profile, dir / "u_centerline.csv");
    write_profile_csv(profiles.v_profile, dir / "v_centerline.csv");
  }
  if (cfg.emit_field) write_field_csv(field_grid(result.solution, cfg.field_nx, cfg.field_ny), dir / "field.csv");
  if (cfg.emit_error_map) {
    if (auto mms = exact_solution(cfg)) write_error_map(result.solution, *mms, cfg.eval_grid, dir / "error_map.csv");
  }
  if (cfg.emit_matrix && result.system) write_system(*result.system, dir / "system.rplm");

  out << "preset=" << cfg.preset << " n_units=" << cfg.pai.n_units << " rows=" << result.rows
      << " residual_mean_abs=" << format_double(result.solve.residual_mean_abs)
      << " rank=" << result.solve.effective_rank << " train_s=" << result.timings.train_s;
  if (result.error) out << " error_mean_abs=" << format_double(result.error->mean_abs);
  out << '\n';
  return kExitOk;
}

int cmd_sweep(const Overrides& o, const std::optional<std::string>& spec_path, std::optional<int> parallelism,
              std::ostream& out) {
  const RunConfig base = build_config(o);
  apply_threads(base);
  SweepSpec spec;
  if (spec_path) {
    std::ifstream in(*spec_path);
    if (!in) throw ConfigError("cannot read sweep spec " + *spec_path);
    std::stringstream ss;
    ss << in.rdbuf();
    spec = parse_sweep_spec(ss.str(), base);
  } else {
    spec = default_width_sweep(base);
  }
  if (parallelism) spec.parallelism = *parallelism;
  validate(spec);
  std::filesystem::create_directories(base.output_dir);

  const auto rows = run_sweep(spec);
  write_sweep_csv(rows, base.output_dir / "sweep.csv");
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.ok() ? 0 : 1;
  out << "sweep cells=" << rows.size() << " failed=" << failed << '\n';
  return kExitOk;
}

std::string module_tag(const Error& e) {
  if (dynamic_cast<const UnderdeterminedSystem*>(&e) || dynamic_cast<const AssemblyFailure*>(&e)) return "assembly";
  if (dynamic_cast<const NumericalFailure*>(&e) || dynamic_cast<const RankZero*>(&e)) return "lsq_solver";
  return "pipeline";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gaussian RBF collocation solver for the biharmonic benchmarks", "rbf_pielm"};
  app.require_subcommand(1);

  Overrides solve_opts;
  auto* solve = app.add_subcommand("solve", "run one preset and write report + CSV outputs");
  add_common_options(*solve, solve_opts);

  Overrides sweep_opts;
  std::optional<std::string> spec_path;
  std::optional<int> parallelism;
  auto* sweep = app.add_subcommand("sweep", "residual over a hyperparameter grid, written to sweep.csv");
  add_common_options(*sweep, sweep_opts);
  sweep->add_option("--spec", spec_path, "sweep description file (default: 10x10 sigma0/sigmac grid)");
  sweep->add_option("--parallelism", parallelism, "cells solved concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rbf_pielm: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_opts, out);
    return cmd_sweep(sweep_opts, spec_path, parallelism, out);
  } catch (const ConfigError& e) {
    err << "rbf_pielm: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnderdeterminedSystem& e) {
    err << "rbf_pielm: [" << module_tag(e) << "] " << e.what() << '\n';
    return kExitNumeric;
  } catch (const AssemblyFailure& e) {
    err << "rbf_pielm: [" << module_tag(e) << "] " << e.what() << '\n';
    return kExitNumeric;
  } catch (const NumericalFailure& e) {
    err << "rbf_pielm: [" << module_tag(e) << "] " << e.what() << '\n';
    return kExitNumeric;
  } catch (const RankZero& e) {
    err << "rbf_pielm: [" << module_tag(e) << "] " << e.what() << '\n';
    return kExitNumeric;
  } catch (const InvalidArgument& e) {
    err << "rbf_pielm: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "rbf_pielm: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace rbfpielm
