// Command-line driver for convergence studies.
//
//   wgrect run --case 1 --family uniform --base 4 --levels 7 --rho 6
//   wgrect check --config study.json --expect expect.json
//   wgrect dump-matrix --case 2 --base 4 --level 1 --out a.txt
//
// Exit codes: 0 ok, 1 tolerance failure, 2 invalid config, 3 solver failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "wgrect/error.hpp"
#include "wgrect/study.hpp"

namespace {

using nlohmann::json;
using wgrect::Error;
using wgrect::ErrorCode;
using wgrect::StudyConfig;

constexpr int kOk = 0;
constexpr int kToleranceFailure = 1;
constexpr int kInvalidConfig = 2;
constexpr int kSolverFailure = 3;

struct Overrides {
  std::string config;
  std::optional<std::string> case_id, family, boundary, h_label, stabilizer_scale,
      coefficient, out;
  std::optional<int> base, levels, quad_order;
  std::optional<double> rho, amplitude, solver_tol;
  std::optional<std::uint64_t> seed;

  void add_to(CLI::App* app, bool with_out) {
    app->add_option("--config", config, "JSON study config");
    app->add_option("--case", case_id, "case id: patch, 1..11");
    app->add_option("--family", family,
                    "uniform | rect2x3 | graded | perturbed | perturbed-resampled");
    app->add_option("--base", base, "base mesh size");
    app->add_option("--levels", levels, "number of mesh sizes");
    app->add_option("--rho", rho, "stabilization parameter");
    app->add_option("--boundary", boundary, "l2 | perturbed");
    app->add_option("--seed", seed, "seed for perturbed meshes");
    app->add_option("--amplitude", amplitude, "grid-line perturbation amplitude");
    app->add_option("--quad-order", quad_order, "Gauss points per direction");
    app->add_option("--solver-tol", solver_tol, "CG relative residual tolerance");
    app->add_option("--h-label", h_label,
                    "max_edge | mean_edge | max_diameter | inverse_n");
    app->add_option("--stabilizer-scale", stabilizer_scale,
                    "max_edge | mean_edge | max_diameter | inverse_n");
    app->add_option("--coefficient", coefficient, "cell_average | center");
    if (with_out) app->add_option("--out", out, "output path");
  }

  StudyConfig resolve() const {
    StudyConfig cfg;
    if (!config.empty()) {
      std::ifstream in(config);
      if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open " + config);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, config + ": " + e.what());
      }
      cfg = wgrect::config_from_json(j, cfg);
    }
    if (case_id) cfg.case_id = *case_id;
    if (family) cfg.family = wgrect::parse_family(*family);
    if (base) cfg.base = *base;
    if (levels) cfg.levels = *levels;
    if (rho) cfg.rho = *rho;
    if (boundary) cfg.boundary = wgrect::parse_boundary(*boundary);
    if (seed) cfg.seed = *seed;
    if (amplitude) cfg.amplitude = *amplitude;
    if (quad_order) cfg.quad_order = *quad_order;
    if (solver_tol) cfg.solver_tol = *solver_tol;
    if (h_label) cfg.h_label = wgrect::parse_size_measure(*h_label);
    if (stabilizer_scale) {
      cfg.stabilizer_scale = wgrect::parse_size_measure(*stabilizer_scale);
    }
    if (coefficient) cfg.coefficient = wgrect::parse_coefficient(*coefficient);
    if (out) cfg.out = *out;
    return cfg;
  }
};

void write_csv_file(const wgrect::StudyResult& res) {
  if (res.config.out.empty()) return;
  if (res.config.out == "-") {
    wgrect::write_csv(std::cout, res);
    return;
  }
  std::ofstream os(res.config.out);
  if (!os) throw Error(ErrorCode::InvalidConfig, "cannot write " + res.config.out);
  wgrect::write_csv(os, res);
}

int run(const Overrides& o) {
  const wgrect::StudyResult res = wgrect::run_study(o.resolve());
  wgrect::write_table(std::cout, res);
  write_csv_file(res);
  return kOk;
}

int check(const Overrides& o, const std::string& expect_path,
          const std::string& verdict_path) {
  std::ifstream in(expect_path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open " + expect_path);
  json expect;
  try {
    expect = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidConfig, expect_path + ": " + e.what());
  }
  const wgrect::StudyResult res = wgrect::run_study(o.resolve());
  write_csv_file(res);
  const json verdict = wgrect::check(res, expect);
  if (verdict_path.empty()) {
    std::cout << verdict.dump(2) << '\n';
  } else {
    std::ofstream(verdict_path) << verdict.dump(2) << '\n';
  }
  return verdict["pass"].get<bool>() ? kOk : kToleranceFailure;
}

int dump_matrix(const Overrides& o, int level, const std::string& rhs_path) {
  const StudyConfig cfg = o.resolve();
  const auto meshes = wgrect::study_meshes(cfg);
  if (level < 0 || level >= static_cast<int>(meshes.size())) {
    throw Error(ErrorCode::InvalidConfig, "level out of range");
  }
  const wgrect::AssembledSystem sys = wgrect::assemble(
      meshes[level], wgrect::get_case(cfg.case_id), cfg.assembly_options());
  if (cfg.out.empty() || cfg.out == "-") {
    wgrect::write_coordinate(std::cout, sys.system.a);
  } else {
    std::ofstream os(cfg.out);
    if (!os) throw Error(ErrorCode::InvalidConfig, "cannot write " + cfg.out);
    wgrect::write_coordinate(os, sys.system.a);
  }
  if (!rhs_path.empty()) {
    std::ofstream os(rhs_path);
    os.precision(17);
    for (double v : sys.system.rhs) os << v << '\n';
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::SolverFailure ? kSolverFailure : kInvalidConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak Galerkin convergence studies on rectangular meshes"};
  app.require_subcommand(1);

  Overrides run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "run a convergence study");
  run_opts.add_to(run_cmd, true);

  Overrides check_opts;
  std::string expect_path;
  std::string verdict_path;
  CLI::App* check_cmd =
      app.add_subcommand("check", "run a study and compare it with expectations");
  check_opts.add_to(check_cmd, true);
  check_cmd->add_option("--expect", expect_path, "expectations JSON")->required();
  check_cmd->add_option("--verdict", verdict_path, "write the verdict JSON here");

  Overrides dump_opts;
  int level = 0;
  std::string rhs_path;
  CLI::App* dump_cmd =
      app.add_subcommand("dump-matrix", "write an assembled matrix in coordinate format");
  dump_opts.add_to(dump_cmd, true);
  dump_cmd->add_option("--level", level, "mesh index within the study");
  dump_cmd->add_option("--rhs", rhs_path, "also write the right-hand side");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidConfig;
  }

  try {
    if (*run_cmd) return run(run_opts);
    if (*check_cmd) return check(check_opts, expect_path, verdict_path);
    return dump_matrix(dump_opts, level, rhs_path);
  } catch (const Error& e) {
    std::cerr << "error [" << wgrect::to_string(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
}
