#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "wgrect/assembly.hpp"
#include "wgrect/metrics.hpp"

namespace wgrect {

enum class MeshFamily {
  Uniform,             // base x base, bisected per level
  Rect2x3,             // base x (3 base / 2), bisected per level; base even
  Graded,              // graded_half(base, base), bisected per level
  Perturbed,           // perturbed base x base, bisected per level
  PerturbedResampled,  // per pair: fresh perturbed N x N and its bisection
};

struct StudyConfig {
  std::string case_id = "1";
  MeshFamily family = MeshFamily::Uniform;
  int base = 4;
  /// Number of distinct mesh sizes. Bisection families produce this many
  /// meshes; the resampled family produces levels - 1 pairs with
  /// N = base, 2 base, ..., each generated with seed + pair index.
  int levels = 5;
  double rho = 1.0;
  BoundaryMode boundary = BoundaryMode::L2Projection;
  std::optional<std::uint64_t> seed;
  double amplitude = 0.2;
  int quad_order = 5;
  double solver_tol = 1e-12;
  SizeMeasure h_label = SizeMeasure::MaxEdge;
  SizeMeasure stabilizer_scale = SizeMeasure::MaxEdge;
  CoefficientRule coefficient = CoefficientRule::CellAverage;
  std::string out;  // CSV path; empty for none

  AssemblyOptions assembly_options() const;
};

/// Throws Error(InvalidConfig) for malformed values, Error(UnknownCase),
/// Error(UnsupportedCombination) for an incompatible boundary mode, and
/// Error(InterfaceMisaligned) / Error(UnsupportedDomain) when the mesh family
/// cannot fit the case.
void validate(const StudyConfig& cfg);

/// Meshes in the order they are solved. For the resampled family entries
/// 2p and 2p + 1 form pair p.
std::vector<Mesh> study_meshes(const StudyConfig& cfg);

struct StudyResult {
  StudyConfig config;
  std::vector<ErrorReport> reports;
  std::vector<std::pair<int, int>> pairs;  // report indices of each rate row
  std::vector<RateRow> pairwise;
  RateRow last;
  RateRow fit;  // empty for the resampled family
};

/// Validates, solves every level and computes rates.
/// Throws Error(SolverFailure) if CG does not converge.
StudyResult run_study(const StudyConfig& cfg);

/// Assembles, solves and evaluates one mesh.
ErrorReport solve_level(const Mesh& mesh, const ProblemCase& pc,
                        const StudyConfig& cfg);

void write_csv(std::ostream& os, const StudyResult& result);
void write_table(std::ostream& os, const StudyResult& result);

std::string to_string(MeshFamily f);
std::string to_string(BoundaryMode m);
std::string to_string(SizeMeasure m);
std::string to_string(CoefficientRule r);
MeshFamily parse_family(const std::string& s);
BoundaryMode parse_boundary(const std::string& s);
SizeMeasure parse_size_measure(const std::string& s);
CoefficientRule parse_coefficient(const std::string& s);

/// Keys: case, family, base, levels, rho, boundary, seed, amplitude,
/// quad_order, solver_tol, h_label, stabilizer_scale, coefficient, out.
/// Missing keys keep the values in `base`. Throws Error(InvalidConfig) on
/// unknown keys or wrong types.
StudyConfig config_from_json(const nlohmann::json& j, StudyConfig base = {});
nlohmann::json config_to_json(const StudyConfig& cfg);

/// Expectations document: {"expectations": [ ... ]}, each entry one of
///   {"kind": "value", "column", "level", "target", "rel_tol"?, "abs_tol"?}
///   {"kind": "rate", "column", "which": "last"|"fit"|<pair index>,
///    "target", "abs_tol"}
///   {"kind": "rate_band", "column", "lo", "hi"}   every pairwise rate
///   {"kind": "max", "column", "abs_tol"}          every level
/// Columns are the names in kErrorColumns. Returns {"pass": bool,
/// "results": [...]}; malformed entries throw Error(InvalidConfig).
nlohmann::json check(const StudyResult& result, const nlohmann::json& expectations);

}  // namespace wgrect
