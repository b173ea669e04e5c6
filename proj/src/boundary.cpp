#include "wgrect/boundary.hpp"

#include "wgrect/error.hpp"
#include "wgrect/projections.hpp"

namespace wgrect {

std::vector<double> boundary_values(BoundaryMode mode, const ProblemCase& pc,
                                    const Mesh& mesh, double rho, double h,
                                    const GaussRule& rule) {
  const bool perturbed = mode == BoundaryMode::PerturbedProjection;
  if (perturbed && !pc.diagonal_on_boundary) {
    throw Error(ErrorCode::UnsupportedCombination,
                "perturbed boundary projection needs a tensor that is diagonal "
                "on the boundary (case " + pc.id + ")");
  }
  if (perturbed && (!(rho > 0.0) || !(h > 0.0))) {
    throw Error(ErrorCode::InvalidArgument,
                "boundary_values: rho and h must be positive");
  }
  std::vector<double> g(mesh.num_edges(), 0.0);
  const ScalarField trace = [&pc](double x, double y) { return pc.g(x, y); };
  for (int id = 0; id < mesh.num_edges(); ++id) {
    if (!mesh.is_boundary_edge(id)) continue;
    const EdgeGeom e = mesh.edge_geometry(id);
    g[id] = q_b(trace, e, rule);
    if (!perturbed) continue;
    const Vec2 m = e.midpoint();
    const Tensor2 a = pc.a(m.x, m.y);
    const double len = e.length();
    const double a_t = e.orientation == Orientation::Vertical ? a.yy : a.xx;
    const ScalarField g_tt = [&pc, o = e.orientation](double x, double y) {
      return pc.g_tt(o, x, y);
    };
    g[id] += len * (len - 6.0 * a_t * h / rho) / 12.0 * q_b(g_tt, e, rule);
  }
  return g;
}

}  // namespace wgrect
