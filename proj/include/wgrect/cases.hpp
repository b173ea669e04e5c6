#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wgrect/mesh.hpp"
#include "wgrect/types.hpp"

namespace wgrect {

/// A manufactured test problem  -div(a grad u) + c u = f,  u = g on the
/// boundary, with every field given analytically. Piecewise cases select the
/// region by the evaluation point; interfaces are listed so meshes can be
/// checked for alignment.
struct ProblemCase {
  std::string id;
  std::string description;
  Domain domain;
  TensorField a;
  ScalarField c;  // empty when there is no reaction term
  ScalarField u;
  VectorField grad_u;
  TensorField hessian_u;  // (u_xx, u_xy, u_yy)
  ScalarField f;
  std::vector<double> interface_x;
  std::vector<double> interface_y;
  /// True iff a_12 vanishes on the whole boundary, which is what the
  /// perturbed boundary projection needs.
  bool diagonal_on_boundary = true;
  /// u vanishes on the boundary. g is then exactly 0 rather than the
  /// rounded trace of u (sin(pi) is not 0 in floating point).
  bool homogeneous_dirichlet = false;

  bool has_reaction() const noexcept { return static_cast<bool>(c); }
  double g(double x, double y) const {
    return homogeneous_dirichlet ? 0.0 : u(x, y);
  }
  /// Second derivative of g along a boundary side: g_yy on vertical sides,
  /// g_xx on horizontal sides.
  double g_tt(Orientation side, double x, double y) const;
};

/// ids: "patch", "1" .. "11". Throws Error(UnknownCase).
ProblemCase get_case(std::string_view id);
std::vector<std::string> case_ids();

struct ResidualCheck {
  double max_residual = 0.0;  // max |r| / max(1, |f|) over the samples
  Vec2 worst;
};

/// Evaluates -div(a grad u) + c u - f on a samples x samples grid, skipping
/// points within 2 * step of an interface. The divergence is a fourth-order
/// central difference of the analytic flux a grad u with the given step.
ResidualCheck pde_residual(const ProblemCase& pc, int samples = 17,
                           double step = 1e-4);

/// Returns pc.f after checking pde_residual against tol.
/// Throws Error(CaseDefinition) if the residual exceeds tol.
ScalarField validated_source(const ProblemCase& pc, double tol = 1e-6,
                             double step = 1e-4);

struct InterfaceJumps {
  double max_value_jump = 0.0;
  double max_flux_jump = 0.0;  // normal component of a grad u
};

/// Jumps of u and of the normal flux across every declared interface,
/// sampled at `samples` points per interface line.
InterfaceJumps interface_jumps(const ProblemCase& pc, int samples = 33);

}  // namespace wgrect
