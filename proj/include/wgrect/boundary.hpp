#pragma once

#include <vector>

#include "wgrect/cases.hpp"
#include "wgrect/mesh.hpp"
#include "wgrect/quadrature.hpp"

namespace wgrect {

enum class BoundaryMode {
  L2Projection,         // Q_b g
  PerturbedProjection,  // Q_b g plus an O(h^2) correction, diagonal tensors only
};

/// Dirichlet values indexed by edge id; interior entries are 0.
///
/// PerturbedProjection adds (1/12) hy (hy - 6 a22 h / rho) Q_b(g_yy) on a
/// vertical edge of length hy and (1/12) hx (hx - 6 a11 h / rho) Q_b(g_xx) on a
/// horizontal edge of length hx, with the tensor taken at the edge midpoint
/// and h the stabilizer mesh size.
/// Throws Error(UnsupportedCombination) for PerturbedProjection when the case
/// tensor is not diagonal on the boundary.
std::vector<double> boundary_values(BoundaryMode mode, const ProblemCase& pc,
                                    const Mesh& mesh, double rho, double h,
                                    const GaussRule& rule);

}  // namespace wgrect
