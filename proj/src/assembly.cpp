#include "wgrect/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wgrect/error.hpp"

namespace wgrect {

namespace {

bool on_grid(std::span<const double> lines, double v, double tol) {
  return std::any_of(lines.begin(), lines.end(),
                     [&](double l) { return std::abs(l - v) <= tol; });
}

}  // namespace

void check_alignment(const Mesh& mesh, const ProblemCase& pc) {
  const Domain d = mesh.domain();
  const double scale = std::max(pc.domain.x_max - pc.domain.x_min,
                                pc.domain.y_max - pc.domain.y_min);
  const double tol = 1e-12 * scale;
  if (std::abs(d.x_min - pc.domain.x_min) > tol ||
      std::abs(d.x_max - pc.domain.x_max) > tol ||
      std::abs(d.y_min - pc.domain.y_min) > tol ||
      std::abs(d.y_max - pc.domain.y_max) > tol) {
    throw Error(ErrorCode::UnsupportedDomain,
                "mesh does not cover the domain of case " + pc.id);
  }
  for (double x : pc.interface_x) {
    if (!on_grid(mesh.xs(), x, tol)) {
      throw Error(ErrorCode::InterfaceMisaligned,
                  "interface x = " + std::to_string(x) + " of case " + pc.id +
                      " is not a mesh line");
    }
  }
  for (double y : pc.interface_y) {
    if (!on_grid(mesh.ys(), y, tol)) {
      throw Error(ErrorCode::InterfaceMisaligned,
                  "interface y = " + std::to_string(y) + " of case " + pc.id +
                      " is not a mesh line");
    }
  }
}

EdgeValues cell_values(const CellGeom& cell, const std::vector<double>& u_b) {
  return {u_b[cell.edges[0]], u_b[cell.edges[1]], u_b[cell.edges[2]],
          u_b[cell.edges[3]]};
}

AssembledSystem assemble(const Mesh& mesh, const ProblemCase& pc,
                         const AssemblyOptions& opts) {
  check_alignment(mesh, pc);
  if (!(opts.rho > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "assemble: rho must be positive");
  }
  const GaussRule rule = gauss_legendre(opts.quad_order);

  AssembledSystem out;
  out.h = mesh.size(opts.stabilizer_scale);
  out.boundary = boundary_values(opts.boundary, pc, mesh, opts.rho, out.h, rule);

  const int n = mesh.num_dofs();
  TripletBuilder builder(n);
  builder.reserve(static_cast<std::size_t>(mesh.num_cells()) * 16);
  std::vector<double> rhs(n, 0.0);

  for (int j = 0; j < mesh.ny(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const CellGeom cell = mesh.cell(i, j);
      const Tensor2 a = cell_coefficient(cell, pc.a, opts.coefficient, rule);
      Mat4 l = local_stiffness(cell, a);
      const Mat4 s = local_stabilizer(cell, opts.rho, out.h);
      Mat4 r{};
      if (pc.has_reaction()) r = local_reaction(cell, pc.c, rule);
      for (int p = 0; p < 4; ++p) {
        for (int q = 0; q < 4; ++q) l[p][q] += s[p][q] + r[p][q];
      }
      const Vec4 f = local_load(cell, pc.f, rule);

      std::array<int, 4> dof{};
      for (int p = 0; p < 4; ++p) dof[p] = mesh.dof_of_edge(cell.edges[p]);
      for (int p = 0; p < 4; ++p) {
        if (dof[p] < 0) continue;
        rhs[dof[p]] += f[p];
        for (int q = 0; q < 4; ++q) {
          if (dof[q] >= 0) {
            builder.add(dof[p], dof[q], l[p][q]);
          } else {
            rhs[dof[p]] -= l[p][q] * out.boundary[cell.edges[q]];
          }
        }
      }
    }
  }
  out.system.a = builder.build();
  out.system.rhs = std::move(rhs);
  return out;
}

std::vector<double> full_edge_solution(const Mesh& mesh,
                                       const std::vector<double>& boundary,
                                       const std::vector<double>& u) {
  if (static_cast<int>(boundary.size()) != mesh.num_edges() ||
      static_cast<int>(u.size()) != mesh.num_dofs()) {
    throw Error(ErrorCode::InvalidArgument, "full_edge_solution: size mismatch");
  }
  std::vector<double> u_b = boundary;
  for (int k = 0; k < mesh.num_dofs(); ++k) u_b[mesh.edge_of_dof(k)] = u[k];
  return u_b;
}

std::vector<ExtensionCoeffs> reconstruct_interior(const Mesh& mesh,
                                                  const std::vector<double>& u_b) {
  std::vector<ExtensionCoeffs> out;
  out.reserve(mesh.num_cells());
  for (int j = 0; j < mesh.ny(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const CellGeom cell = mesh.cell(i, j);
      out.push_back(extension(cell, cell_values(cell, u_b)));
    }
  }
  return out;
}

}  // namespace wgrect
