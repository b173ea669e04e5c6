#pragma once

#include <vector>

#include "wgrect/boundary.hpp"
#include "wgrect/cases.hpp"
#include "wgrect/local.hpp"
#include "wgrect/mesh.hpp"
#include "wgrect/sparse.hpp"

namespace wgrect {

/// Global system over interior-edge unknowns, numbered by Mesh dofs.
struct SparseSpd {
  CsrMatrix a;
  std::vector<double> rhs;

  int size() const noexcept { return a.n; }
};

struct AssemblyOptions {
  double rho = 1.0;
  BoundaryMode boundary = BoundaryMode::L2Projection;
  /// Mesh size h in the stabilizer rho / h and in the boundary perturbation.
  SizeMeasure stabilizer_scale = SizeMeasure::MaxEdge;
  CoefficientRule coefficient = CoefficientRule::CellAverage;
  int quad_order = 5;  // Gauss points per direction
};

struct AssembledSystem {
  SparseSpd system;
  std::vector<double> boundary;  // per edge id, 0 on interior edges
  double h = 0.0;                // stabilizer mesh size actually used
};

/// Throws Error(UnsupportedDomain) if the mesh does not cover the case domain
/// and Error(InterfaceMisaligned) if an interface line is not a grid line.
void check_alignment(const Mesh& mesh, const ProblemCase& pc);

/// Sums L = K + S (+ R) over cells in row-major order and eliminates the
/// boundary edges. Throws as check_alignment and boundary_values do.
AssembledSystem assemble(const Mesh& mesh, const ProblemCase& pc,
                         const AssemblyOptions& opts);

/// Edge-indexed vector: interior entries from u (by dof), boundary entries
/// from `boundary`.
std::vector<double> full_edge_solution(const Mesh& mesh,
                                       const std::vector<double>& boundary,
                                       const std::vector<double>& u);

/// S(u_b) on every cell, row-major. u_b is edge-indexed.
std::vector<ExtensionCoeffs> reconstruct_interior(const Mesh& mesh,
                                                  const std::vector<double>& u_b);

/// Edge values of one cell in e1..e4 order.
EdgeValues cell_values(const CellGeom& cell, const std::vector<double>& u_b);

}  // namespace wgrect
