#include "wgrect/study.hpp"

#include <cmath>
#include <ostream>
#include <set>

#include <fmt/format.h>

#include "wgrect/error.hpp"
#include "wgrect/solver.hpp"

namespace wgrect {

namespace {

using nlohmann::json;

Error invalid(const std::string& what) {
  return Error(ErrorCode::InvalidConfig, what);
}

bool is_perturbed(MeshFamily f) {
  return f == MeshFamily::Perturbed || f == MeshFamily::PerturbedResampled;
}

// Mesh for bisection level 0 (or pair p of the resampled family).
Mesh base_mesh(const StudyConfig& cfg, const Domain& domain, int pair) {
  switch (cfg.family) {
    case MeshFamily::Uniform: return build_uniform(cfg.base, cfg.base, domain);
    case MeshFamily::Rect2x3:
      return build_uniform(cfg.base, 3 * cfg.base / 2, domain);
    case MeshFamily::Graded: return build_graded_half(cfg.base, cfg.base, domain);
    case MeshFamily::Perturbed:
      return build_perturbed(cfg.base, cfg.amplitude, *cfg.seed);
    case MeshFamily::PerturbedResampled:
      return build_perturbed(cfg.base << pair, cfg.amplitude,
                             *cfg.seed + static_cast<std::uint64_t>(pair));
  }
  throw invalid("unknown mesh family");
}

int num_pairs(const StudyConfig& cfg) { return cfg.levels - 1; }

std::string sci(double v) { return fmt::format("{:.5e}", v); }
std::string full(double v) { return fmt::format("{:.17g}", v); }
std::string opt(const std::optional<double>& v, const char* spec) {
  return v ? fmt::format(fmt::runtime(spec), *v) : std::string("NA");
}

int column_index(const std::string& name) {
  for (int k = 0; k < kNumErrorColumns; ++k) {
    if (name == kErrorColumns[k]) return k;
  }
  throw invalid("unknown column '" + name + "'");
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw invalid(fmt::format("field '{}': {}", key, e.what()));
  }
}

bool within(double actual, double target, double abs_tol, double rel_tol) {
  return std::abs(actual - target) <= abs_tol + rel_tol * std::abs(target);
}

}  // namespace

AssemblyOptions StudyConfig::assembly_options() const {
  AssemblyOptions o;
  o.rho = rho;
  o.boundary = boundary;
  o.stabilizer_scale = stabilizer_scale;
  o.coefficient = coefficient;
  o.quad_order = quad_order;
  return o;
}

void validate(const StudyConfig& cfg) {
  if (cfg.levels < 2) throw invalid("levels must be >= 2");
  if (cfg.base < 1) throw invalid("base must be >= 1");
  if (!(cfg.rho > 0.0)) throw invalid("rho must be positive");
  if (!(cfg.solver_tol > 0.0)) throw invalid("solver_tol must be positive");
  if (cfg.quad_order < 1 || cfg.quad_order > 20) {
    throw invalid("quad_order must lie in [1, 20]");
  }
  if (cfg.family == MeshFamily::Rect2x3 && cfg.base % 2 != 0) {
    throw invalid("rect2x3 needs an even base");
  }
  if (is_perturbed(cfg.family)) {
    if (!cfg.seed) throw invalid("perturbed mesh families need a seed");
    if (cfg.base < 2) throw invalid("perturbed mesh families need base >= 2");
    if (!(cfg.amplitude >= 0.0 && cfg.amplitude < 1.0)) {
      throw invalid("amplitude must lie in [0, 1)");
    }
  }
  if (cfg.family == MeshFamily::PerturbedResampled && cfg.levels > 16) {
    throw invalid("perturbed-resampled supports at most 16 levels");
  }

  const ProblemCase pc = get_case(cfg.case_id);
  if (cfg.boundary == BoundaryMode::PerturbedProjection && !pc.diagonal_on_boundary) {
    throw Error(ErrorCode::UnsupportedCombination,
                "case " + pc.id +
                    " has an off-diagonal tensor on the boundary; use --boundary l2");
  }
  if ((cfg.family == MeshFamily::Graded || is_perturbed(cfg.family)) &&
      pc.domain != kUnitSquare) {
    throw Error(ErrorCode::UnsupportedDomain,
                to_string(cfg.family) + " meshes exist only on the unit square");
  }
  const int checks = cfg.family == MeshFamily::PerturbedResampled ? num_pairs(cfg) : 1;
  for (int p = 0; p < checks; ++p) check_alignment(base_mesh(cfg, pc.domain, p), pc);
}

std::vector<Mesh> study_meshes(const StudyConfig& cfg) {
  validate(cfg);
  const Domain domain = get_case(cfg.case_id).domain;
  std::vector<Mesh> out;
  if (cfg.family == MeshFamily::PerturbedResampled) {
    for (int p = 0; p < num_pairs(cfg); ++p) {
      out.push_back(base_mesh(cfg, domain, p));
      out.push_back(refine_bisect(out.back()));
    }
    return out;
  }
  out.push_back(base_mesh(cfg, domain, 0));
  for (int l = 1; l < cfg.levels; ++l) out.push_back(refine_bisect(out.back()));
  return out;
}

ErrorReport solve_level(const Mesh& mesh, const ProblemCase& pc,
                        const StudyConfig& cfg) {
  const AssembledSystem sys = assemble(mesh, pc, cfg.assembly_options());
  const CgResult cg = refined_solve(sys.system.a, sys.system.rhs, cfg.solver_tol);
  if (!cg.converged) {
    throw Error(ErrorCode::SolverFailure,
                fmt::format("CG did not converge on {}x{} mesh: residual {:.3e} "
                            "after {} iterations",
                            mesh.nx(), mesh.ny(), cg.residual, cg.iterations));
  }
  const std::vector<double> u_b = full_edge_solution(mesh, sys.boundary, cg.x);
  ErrorReport rep = error_report(mesh, pc, u_b, cfg.h_label, cfg.quad_order);
  rep.n_dofs = mesh.num_dofs();
  rep.cg_iters = cg.iterations;
  return rep;
}

StudyResult run_study(const StudyConfig& cfg) {
  validate(cfg);
  const ProblemCase pc = get_case(cfg.case_id);
  validated_source(pc);

  StudyResult res;
  res.config = cfg;
  if (cfg.family == MeshFamily::PerturbedResampled) {
    for (int p = 0; p < num_pairs(cfg); ++p) {
      const Mesh coarse = base_mesh(cfg, pc.domain, p);
      res.reports.push_back(solve_level(coarse, pc, cfg));
      res.reports.push_back(solve_level(refine_bisect(coarse), pc, cfg));
      res.pairs.emplace_back(2 * p, 2 * p + 1);
    }
  } else {
    Mesh mesh = base_mesh(cfg, pc.domain, 0);
    for (int l = 0; l < cfg.levels; ++l) {
      if (l > 0) mesh = refine_bisect(mesh);
      res.reports.push_back(solve_level(mesh, pc, cfg));
      if (l > 0) res.pairs.emplace_back(l - 1, l);
    }
    res.fit = rates(res.reports).fit;
  }
  for (const auto& [c, f] : res.pairs) {
    res.pairwise.push_back(pair_rate(res.reports[c], res.reports[f]));
  }
  for (int k = 0; k < kNumErrorColumns; ++k) {
    if (const auto& r = res.pairwise.back()[k]) {
      res.last[k] = std::round(*r * 100.0) / 100.0;
    }
  }
  return res;
}

void write_csv(std::ostream& os, const StudyResult& result) {
  os << "level,h_label,n_dofs";
  for (const char* c : kErrorColumns) os << ',' << c;
  os << ",cg_iters,h_label_full";
  for (const char* c : kErrorColumns) os << ',' << c << "_full";
  os << '\n';

  for (std::size_t l = 0; l < result.reports.size(); ++l) {
    const ErrorReport& r = result.reports[l];
    os << l << ',' << fmt::format("{:.6g}", r.h_label) << ',' << r.n_dofs;
    for (int k = 0; k < kNumErrorColumns; ++k) os << ',' << sci(r.column(k));
    os << ',' << r.cg_iters << ',' << full(r.h_label);
    for (int k = 0; k < kNumErrorColumns; ++k) os << ',' << full(r.column(k));
    os << '\n';
  }

  auto rate_row = [&](const std::string& label, const RateRow& row,
                      const char* spec) {
    os << label << ",,";
    for (const auto& v : row) os << ',' << opt(v, spec);
    os << ",,";
    for (const auto& v : row) os << ',' << opt(v, "{:.17g}");
    os << '\n';
  };
  for (std::size_t p = 0; p < result.pairwise.size(); ++p) {
    const auto [c, f] = result.pairs[p];
    rate_row(fmt::format("rate:{}-{}", c, f), result.pairwise[p], "{:.6g}");
  }
  rate_row("rate_last", result.last, "{:.2f}");
  rate_row("rate_fit", result.fit, "{:.6g}");
}

void write_table(std::ostream& os, const StudyResult& result) {
  const StudyConfig& c = result.config;
  os << fmt::format("case {}  family {}  rho {:g}  boundary {}\n", c.case_id,
                    to_string(c.family), c.rho, to_string(c.boundary));
  os << fmt::format("{:>12}", "h");
  for (const char* name : kErrorColumns) os << fmt::format("{:>13}", name);
  os << fmt::format("{:>9}{:>7}\n", "dofs", "cg");
  for (const ErrorReport& r : result.reports) {
    os << fmt::format("{:>12.6g}", r.h_label);
    for (int k = 0; k < kNumErrorColumns; ++k) {
      os << fmt::format("{:>13.4e}", r.column(k));
    }
    os << fmt::format("{:>9}{:>7}\n", r.n_dofs, r.cg_iters);
  }
  os << fmt::format("{:>12}", "rate");
  for (const auto& v : result.last) os << fmt::format("{:>13}", opt(v, "{:.2f}"));
  os << '\n';
}

std::string to_string(MeshFamily f) {
  switch (f) {
    case MeshFamily::Uniform: return "uniform";
    case MeshFamily::Rect2x3: return "rect2x3";
    case MeshFamily::Graded: return "graded";
    case MeshFamily::Perturbed: return "perturbed";
    case MeshFamily::PerturbedResampled: return "perturbed-resampled";
  }
  return "?";
}

std::string to_string(BoundaryMode m) {
  return m == BoundaryMode::L2Projection ? "l2" : "perturbed";
}

std::string to_string(SizeMeasure m) {
  switch (m) {
    case SizeMeasure::MaxEdge: return "max_edge";
    case SizeMeasure::MeanEdge: return "mean_edge";
    case SizeMeasure::MaxDiameter: return "max_diameter";
    case SizeMeasure::InverseN: return "inverse_n";
  }
  return "?";
}

std::string to_string(CoefficientRule r) {
  return r == CoefficientRule::CellAverage ? "cell_average" : "center";
}

MeshFamily parse_family(const std::string& s) {
  for (MeshFamily f : {MeshFamily::Uniform, MeshFamily::Rect2x3, MeshFamily::Graded,
                       MeshFamily::Perturbed, MeshFamily::PerturbedResampled}) {
    if (s == to_string(f)) return f;
  }
  throw invalid("unknown mesh family '" + s + "'");
}

BoundaryMode parse_boundary(const std::string& s) {
  if (s == "l2") return BoundaryMode::L2Projection;
  if (s == "perturbed") return BoundaryMode::PerturbedProjection;
  throw invalid("unknown boundary mode '" + s + "'");
}

SizeMeasure parse_size_measure(const std::string& s) {
  for (SizeMeasure m : {SizeMeasure::MaxEdge, SizeMeasure::MeanEdge,
                        SizeMeasure::MaxDiameter, SizeMeasure::InverseN}) {
    if (s == to_string(m)) return m;
  }
  throw invalid("unknown size measure '" + s + "'");
}

CoefficientRule parse_coefficient(const std::string& s) {
  if (s == "cell_average") return CoefficientRule::CellAverage;
  if (s == "center") return CoefficientRule::Center;
  throw invalid("unknown coefficient rule '" + s + "'");
}

StudyConfig config_from_json(const json& j, StudyConfig cfg) {
  if (!j.is_object()) throw invalid("config must be a JSON object");
  static const std::set<std::string> keys{
      "case", "family", "base", "levels", "rho", "boundary", "seed", "amplitude",
      "quad_order", "solver_tol", "h_label", "stabilizer_scale", "coefficient", "out"};
  for (const auto& [k, v] : j.items()) {
    if (!keys.contains(k)) throw invalid("unknown config key '" + k + "'");
  }
  if (j.contains("case")) {
    // Accept 3 as well as "3".
    cfg.case_id = j["case"].is_number_integer()
                      ? std::to_string(j["case"].get<int>())
                      : get<std::string>(j, "case");
  }
  if (j.contains("family")) cfg.family = parse_family(get<std::string>(j, "family"));
  if (j.contains("base")) cfg.base = get<int>(j, "base");
  if (j.contains("levels")) cfg.levels = get<int>(j, "levels");
  if (j.contains("rho")) cfg.rho = get<double>(j, "rho");
  if (j.contains("boundary")) {
    cfg.boundary = parse_boundary(get<std::string>(j, "boundary"));
  }
  if (j.contains("seed")) {
    const json& s = j["seed"];
    if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0)) {
      throw invalid("seed must be a non-negative integer");
    }
    cfg.seed = get<std::uint64_t>(j, "seed");
  }
  if (j.contains("amplitude")) cfg.amplitude = get<double>(j, "amplitude");
  if (j.contains("quad_order")) cfg.quad_order = get<int>(j, "quad_order");
  if (j.contains("solver_tol")) cfg.solver_tol = get<double>(j, "solver_tol");
  if (j.contains("h_label")) {
    cfg.h_label = parse_size_measure(get<std::string>(j, "h_label"));
  }
  if (j.contains("stabilizer_scale")) {
    cfg.stabilizer_scale = parse_size_measure(get<std::string>(j, "stabilizer_scale"));
  }
  if (j.contains("coefficient")) {
    cfg.coefficient = parse_coefficient(get<std::string>(j, "coefficient"));
  }
  if (j.contains("out")) cfg.out = get<std::string>(j, "out");
  return cfg;
}

json config_to_json(const StudyConfig& cfg) {
  json j{{"case", cfg.case_id},
         {"family", to_string(cfg.family)},
         {"base", cfg.base},
         {"levels", cfg.levels},
         {"rho", cfg.rho},
         {"boundary", to_string(cfg.boundary)},
         {"amplitude", cfg.amplitude},
         {"quad_order", cfg.quad_order},
         {"solver_tol", cfg.solver_tol},
         {"h_label", to_string(cfg.h_label)},
         {"stabilizer_scale", to_string(cfg.stabilizer_scale)},
         {"coefficient", to_string(cfg.coefficient)},
         {"out", cfg.out}};
  if (cfg.seed) j["seed"] = *cfg.seed;
  return j;
}

json check(const StudyResult& result, const json& expectations) {
  if (!expectations.is_object() || !expectations.contains("expectations") ||
      !expectations["expectations"].is_array()) {
    throw invalid("expectations must be an object with an 'expectations' array");
  }
  json verdict{{"pass", true}, {"results", json::array()}};
  for (const json& e : expectations["expectations"]) {
    const std::string kind = get<std::string>(e, "kind");
    const int col = column_index(get<std::string>(e, "column"));
    json r = e;
    bool pass = false;
    if (kind == "value") {
      const int level = get<int>(e, "level");
      if (level < 0 || level >= static_cast<int>(result.reports.size())) {
        throw invalid(fmt::format("level {} out of range", level));
      }
      const double actual = result.reports[level].column(col);
      pass = within(actual, get<double>(e, "target"), e.value("abs_tol", 0.0),
                    e.value("rel_tol", 0.0));
      r["actual"] = actual;
    } else if (kind == "rate") {
      const json& which = e.contains("which") ? e["which"] : json("last");
      std::optional<double> actual;
      if (which.is_number_integer()) {
        const int p = which.get<int>();
        if (p < 0 || p >= static_cast<int>(result.pairwise.size())) {
          throw invalid(fmt::format("pair {} out of range", p));
        }
        actual = result.pairwise[p][col];
      } else if (which == "last") {
        actual = result.last[col];
      } else if (which == "fit") {
        actual = result.fit[col];
      } else {
        throw invalid("rate 'which' must be last, fit or a pair index");
      }
      pass = actual && within(*actual, get<double>(e, "target"),
                              get<double>(e, "abs_tol"), 0.0);
      r["actual"] = actual ? json(*actual) : json(nullptr);
    } else if (kind == "rate_band") {
      const double lo = get<double>(e, "lo");
      const double hi = get<double>(e, "hi");
      json actual = json::array();
      pass = true;
      for (const RateRow& row : result.pairwise) {
        const auto& v = row[col];
        pass = pass && v && *v >= lo && *v <= hi;
        actual.push_back(v ? json(*v) : json(nullptr));
      }
      r["actual"] = actual;
    } else if (kind == "max") {
      const double tol = get<double>(e, "abs_tol");
      double worst = 0.0;
      for (const ErrorReport& rep : result.reports) {
        worst = std::max(worst, std::abs(rep.column(col)));
      }
      pass = worst <= tol;
      r["actual"] = worst;
    } else {
      throw invalid("unknown expectation kind '" + kind + "'");
    }
    r["pass"] = pass;
    if (!pass) verdict["pass"] = false;
    verdict["results"].push_back(std::move(r));
  }
  return verdict;
}

}  // namespace wgrect
