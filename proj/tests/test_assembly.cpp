#include <cmath>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wgrect/assembly.hpp"
#include "wgrect/projections.hpp"
#include "wgrect/solver.hpp"

namespace wgrect {
namespace {

ProblemCase constant_case(double value) {
  ProblemCase pc = get_case("patch");
  pc.id = "const";
  pc.u = [value](double, double) { return value; };
  pc.grad_u = [](double, double) { return Vec2{}; };
  pc.hessian_u = [](double, double) { return Tensor2{}; };
  pc.f = [](double, double) { return 0.0; };
  return pc;
}

TEST(Assembly, SingleCellHasEmptySystem) {
  const AssembledSystem sys = assemble(build_uniform(1, 1), get_case("1"), {});
  EXPECT_EQ(sys.system.size(), 0);
  EXPECT_TRUE(sys.system.rhs.empty());
  EXPECT_EQ(sys.boundary.size(), 4u);
}

// Sums every cell into a dense edge-by-edge matrix, then eliminates the
// boundary rows and columns by hand.
TEST(Assembly, MatchesDenseHandAssembly) {
  const Mesh mesh(std::vector<double>{0.0, 0.4, 1.0}, std::vector<double>{0.0, 0.7, 1.0});
  const ProblemCase pc = get_case("2");
  AssemblyOptions opts;
  opts.rho = 3.0;
  const AssembledSystem sys = assemble(mesh, pc, opts);
  const GaussRule rule = gauss_legendre(opts.quad_order);
  const int ne = mesh.num_edges();
  std::vector<double> big(ne * ne, 0.0), load(ne, 0.0);
  for (const CellGeom& c : mesh.cells()) {
    const Mat4 k = local_stiffness(c, {1.0, 0.0, 1.0});
    const Mat4 s = local_stabilizer(c, 3.0, 0.7);
    const Vec4 f = local_load(c, pc.f, rule);
    for (int p = 0; p < 4; ++p) {
      load[c.edges[p]] += f[p];
      for (int q = 0; q < 4; ++q) big[c.edges[p] * ne + c.edges[q]] += k[p][q] + s[p][q];
    }
  }
  EXPECT_DOUBLE_EQ(sys.h, 0.7);
  const int n = mesh.num_dofs();
  ASSERT_EQ(sys.system.size(), n);
  const std::vector<double> dense = sys.system.a.to_dense();
  for (int a = 0; a < n; ++a) {
    const int ea = mesh.edge_of_dof(a);
    double rhs = load[ea];
    for (int e = 0; e < ne; ++e) {
      if (mesh.is_boundary_edge(e)) rhs -= big[ea * ne + e] * sys.boundary[e];
    }
    EXPECT_NEAR(sys.system.rhs[a], rhs, 1e-14);
    for (int b = 0; b < n; ++b) {
      EXPECT_NEAR(dense[a * n + b], big[ea * ne + mesh.edge_of_dof(b)], 1e-14);
    }
  }
}

TEST(Assembly, SymmetricWithBoundedStencil) {
  SplitMix64 g(31);
  const Mesh mesh(random_axis(g, 6), random_axis(g, 5));
  for (const char* id : {"4", "10", "11"}) {
    ProblemCase pc = get_case(id);
    const CsrMatrix a = assemble(mesh, pc, {}).system.a;
    for (int i = 0; i < a.n; ++i) {
      EXPECT_LE(a.row_ptr[i + 1] - a.row_ptr[i], 7);
      EXPECT_GT(a.at(i, i), 0.0);
      for (auto k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
        EXPECT_DOUBLE_EQ(a.val[k], a.at(a.col[k], i)) << id;
      }
    }
  }
}

TEST(Assembly, ConstantSolutionIsExact) {
  const ProblemCase pc = constant_case(5.0);
  const Mesh mesh = build_uniform(5, 3);
  const AssembledSystem sys = assemble(mesh, pc, {});
  const std::vector<double> u = dense_solve(sys.system.a.to_dense(), sys.system.size(),
                                            sys.system.rhs);
  for (double v : u) EXPECT_NEAR(v, 5.0, 1e-13);
}

TEST(Assembly, PatchTestOnNonuniformMeshes) {
  SplitMix64 g(32);
  const ProblemCase pc = get_case("patch");
  const GaussRule rule = gauss_legendre(5);
  for (int trial = 0; trial < 5; ++trial) {
    const Mesh mesh(random_axis(g, 3 + trial), random_axis(g, 7 - trial));
    AssemblyOptions opts;
    opts.rho = 0.5 + trial;
    const AssembledSystem sys = assemble(mesh, pc, opts);
    const CgResult r = refined_solve(sys.system.a, sys.system.rhs);
    ASSERT_TRUE(r.converged);
    const auto u_b = full_edge_solution(mesh, sys.boundary, r.x);
    for (int id = 0; id < mesh.num_edges(); ++id) {
      EXPECT_NEAR(u_b[id], q_b(pc.u, mesh.edge_geometry(id), rule), 1e-10);
    }
    for (const CellGeom& c : mesh.cells()) {
      const Vec2 gd = weak_gradient(c, cell_values(c, u_b));
      EXPECT_NEAR(gd.x, 2.0, 1e-9);
      EXPECT_NEAR(gd.y, -3.0, 1e-9);
    }
  }
}

TEST(Assembly, PerturbedBoundaryOnSquaresWithRhoSixLeavesSystemUnchanged) {
  const Mesh mesh = build_uniform(8, 8);
  AssemblyOptions opts;
  opts.rho = 6.0;
  const AssembledSystem plain = assemble(mesh, get_case("3"), opts);
  opts.boundary = BoundaryMode::PerturbedProjection;
  const AssembledSystem pert = assemble(mesh, get_case("3"), opts);
  EXPECT_EQ(plain.system.a.val, pert.system.a.val);
  for (int k = 0; k < plain.system.size(); ++k) {
    EXPECT_NEAR(plain.system.rhs[k], pert.system.rhs[k], 1e-15);
  }
}

TEST(Assembly, AlignmentChecks) {
  EXPECT_EQ(error_code([] { assemble(build_uniform(3, 4), get_case("9"), {}); }),
            ErrorCode::InterfaceMisaligned);
  EXPECT_EQ(error_code([] { assemble(build_uniform(4, 4), get_case("8"), {}); }),
            ErrorCode::UnsupportedDomain);
  EXPECT_EQ(error_code([] {
              assemble(build_uniform(3, 4, {-1.0, 1.0, -1.0, 1.0}), get_case("8"), {});
            }),
            ErrorCode::InterfaceMisaligned);
  EXPECT_NO_THROW(assemble(build_uniform(4, 4, {-1.0, 1.0, -1.0, 1.0}), get_case("8"), {}));
  AssemblyOptions bad;
  bad.rho = 0.0;
  EXPECT_EQ(error_code([&] { assemble(build_uniform(2, 2), get_case("1"), bad); }),
            ErrorCode::InvalidArgument);
}

TEST(Assembly, ReconstructionHelpers) {
  const Mesh mesh = build_uniform(2, 2);
  std::vector<double> boundary(mesh.num_edges(), 1.0);
  for (int id = 0; id < mesh.num_edges(); ++id) {
    if (!mesh.is_boundary_edge(id)) boundary[id] = 0.0;
  }
  const std::vector<double> u(mesh.num_dofs(), 1.0);
  const auto u_b = full_edge_solution(mesh, boundary, u);
  for (double v : u_b) EXPECT_EQ(v, 1.0);
  const auto s = reconstruct_interior(mesh, u_b);
  ASSERT_EQ(s.size(), 4u);
  for (const auto& e : s) {
    EXPECT_DOUBLE_EQ(e.c1, 1.0);
    EXPECT_EQ(e.c2, 0.0);
  }
  EXPECT_EQ(error_code([&] { full_edge_solution(mesh, boundary, {}); }),
            ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace wgrect
