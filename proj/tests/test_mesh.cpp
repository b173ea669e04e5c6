#include <cmath>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wgrect/mesh.hpp"

namespace wgrect {
namespace {

TEST(Mesh, CountsForTwoByThree) {
  const Mesh m = build_uniform(2, 3);
  EXPECT_EQ(m.num_cells(), 6);
  EXPECT_EQ(m.num_vertical_edges(), 9);
  EXPECT_EQ(m.num_horizontal_edges(), 8);
  EXPECT_EQ(m.num_edges(), 17);
  // one interior vertical line x 3 rows + two interior horizontal lines x 2
  EXPECT_EQ(m.num_dofs(), 7);
}

TEST(Mesh, SingleCellHasNoDofs) {
  const Mesh m = build_uniform(1, 1);
  EXPECT_EQ(m.num_edges(), 4);
  EXPECT_EQ(m.num_dofs(), 0);
}

TEST(Mesh, DofNumberingIsIncreasingInEdgeId) {
  const Mesh m = build_uniform(4, 3);
  int last = -1;
  for (int id = 0; id < m.num_edges(); ++id) {
    const int d = m.dof_of_edge(id);
    const EdgeIndex e = m.edge(id);
    EXPECT_EQ(e.boundary, m.is_boundary_edge(id));
    if (e.boundary) {
      EXPECT_EQ(d, -1);
      EXPECT_FALSE(e.dof.has_value());
      continue;
    }
    EXPECT_EQ(d, last + 1);
    EXPECT_EQ(*e.dof, d);
    EXPECT_EQ(m.edge_of_dof(d), id);
    last = d;
  }
  EXPECT_EQ(last + 1, m.num_dofs());
}

TEST(Mesh, EveryInteriorEdgeIsSharedByTwoCells) {
  const Mesh m = build_uniform(3, 5);
  std::vector<int> count(m.num_edges(), 0);
  for (const CellGeom& c : m.cells()) {
    for (int id : c.edges) ++count[id];
  }
  for (int id = 0; id < m.num_edges(); ++id) {
    EXPECT_EQ(count[id], m.is_boundary_edge(id) ? 1 : 2) << id;
  }
}

TEST(Mesh, CellEdgesMatchGeometry) {
  const Mesh m(std::vector<double>{0.0, 0.3, 1.0}, std::vector<double>{0.0, 0.6, 1.0});
  const CellGeom c = m.cell(1, 0);
  EXPECT_DOUBLE_EQ(c.hx, 0.7);
  EXPECT_DOUBLE_EQ(c.hy, 0.6);
  for (int s = 0; s < 4; ++s) {
    const EdgeGeom e = m.edge_geometry(c.edges[s]);
    const Vec2 mid = e.midpoint();
    EXPECT_DOUBLE_EQ(mid.x, c.midpoint(s).x);
    EXPECT_DOUBLE_EQ(mid.y, c.midpoint(s).y);
    EXPECT_DOUBLE_EQ(e.length(), s < 2 ? c.hy : c.hx);
    EXPECT_EQ(e.orientation, s < 2 ? Orientation::Vertical : Orientation::Horizontal);
  }
}

TEST(Mesh, RejectsBadCoordinates) {
  EXPECT_EQ(error_code([] { Mesh({0.0}, {0.0, 1.0}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([] { Mesh({0.0, 0.5, 0.5, 1.0}, {0.0, 1.0}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([] { Mesh({0.0, NAN, 1.0}, {0.0, 1.0}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([] { build_uniform(0, 3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([] { build_uniform(2, 2, Domain{1.0, 1.0, 0.0, 1.0}); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([] { build_uniform(2, 2).edge(-1); }), ErrorCode::InvalidArgument);
}

TEST(Mesh, UniformOnGeneralDomain) {
  const Mesh m = build_uniform(8, 4, Domain{-1.0, 1.0, -1.0, 1.0});
  EXPECT_EQ(m.domain(), (Domain{-1.0, 1.0, -1.0, 1.0}));
  EXPECT_DOUBLE_EQ(m.xs()[4], 0.0);
  EXPECT_DOUBLE_EQ(m.cell(0, 0).hx, 0.25);
  EXPECT_DOUBLE_EQ(m.cell(0, 0).hy, 0.5);
}

TEST(Mesh, SizeMeasures) {
  const Mesh m = build_uniform(4, 6);
  EXPECT_DOUBLE_EQ(m.size(SizeMeasure::MaxEdge), 0.25);
  EXPECT_DOUBLE_EQ(m.size(SizeMeasure::MeanEdge), (0.25 + 1.0 / 6.0) / 2.0);
  EXPECT_DOUBLE_EQ(m.size(SizeMeasure::MaxDiameter), std::hypot(0.25, 1.0 / 6.0));
  EXPECT_DOUBLE_EQ(m.size(SizeMeasure::InverseN), 0.25);
}

TEST(Mesh, GradedHalf) {
  const Mesh m = build_graded_half(2, 2);
  const std::vector<double> want{0.0, 0.25, 0.5, 0.625, 0.75, 0.875, 1.0};
  ASSERT_EQ(m.nx(), 6);
  for (int k = 0; k <= 6; ++k) {
    EXPECT_DOUBLE_EQ(m.xs()[k], want[k]);
    EXPECT_DOUBLE_EQ(m.ys()[k], want[k]);
  }
  EXPECT_EQ(error_code([] { build_graded_half(2, 2, Domain{-1.0, 1.0, -1.0, 1.0}); }),
            ErrorCode::UnsupportedDomain);
}

TEST(Mesh, RefineBisectHalvesEveryInterval) {
  const Mesh m = build_graded_half(1, 2);
  const Mesh r = refine_bisect(m);
  ASSERT_EQ(r.nx(), 2 * m.nx());
  ASSERT_EQ(r.ny(), 2 * m.ny());
  for (int k = 0; k < m.nx(); ++k) {
    EXPECT_DOUBLE_EQ(r.xs()[2 * k], m.xs()[k]);
    EXPECT_DOUBLE_EQ(r.xs()[2 * k + 1], 0.5 * (m.xs()[k] + m.xs()[k + 1]));
  }
  EXPECT_EQ(refine_bisect(build_uniform(4, 4)), build_uniform(8, 8));
}

TEST(SplitMix64, ReferenceSequenceFromSeedZero) {
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(g.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(g.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, UniformInUnitInterval) {
  SplitMix64 g(42);
  for (int k = 0; k < 10000; ++k) {
    const double u = g.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(PerturbedMesh, ZeroAmplitudeIsUniform) {
  EXPECT_EQ(build_perturbed(8, 0.0, 7), build_uniform(8, 8));
}

TEST(PerturbedMesh, ShiftsAreBoundedAndBoundaryFixed) {
  const int n = 16;
  const double a = 0.2;
  const double h = 1.0 / n;
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    const Mesh m = build_perturbed(n, a, seed);
    for (auto axis : {m.xs(), m.ys()}) {
      EXPECT_EQ(axis.front(), 0.0);
      EXPECT_EQ(axis.back(), 1.0);
      for (int i = 1; i < n; ++i) {
        EXPECT_LE(std::abs(axis[i] - i * h), a * h / 2 + 1e-15);
      }
      for (int i = 0; i < n; ++i) {
        const double w = axis[i + 1] - axis[i];
        EXPECT_GE(w, (1.0 - a) * h - 1e-15);
        EXPECT_LE(w, (1.0 + a) * h + 1e-15);
      }
    }
  }
}

TEST(PerturbedMesh, DrawsXLinesThenYLines) {
  const int n = 4;
  const Mesh m = build_perturbed(n, 0.5, 3);
  SplitMix64 g(3);
  for (int i = 1; i < n; ++i) {
    EXPECT_DOUBLE_EQ(m.xs()[i], double(i) / n + 0.5 * (g.uniform01() - 0.5) / n);
  }
  for (int i = 1; i < n; ++i) {
    EXPECT_DOUBLE_EQ(m.ys()[i], double(i) / n + 0.5 * (g.uniform01() - 0.5) / n);
  }
}

TEST(PerturbedMesh, SeedDeterminesMesh) {
  EXPECT_EQ(build_perturbed(8, 0.2, 5), build_perturbed(8, 0.2, 5));
  EXPECT_FALSE(build_perturbed(8, 0.2, 5) == build_perturbed(8, 0.2, 6));
}

TEST(PerturbedMesh, RejectsBadArguments) {
  EXPECT_EQ(error_code([] { build_perturbed(1, 0.2, 1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([] { build_perturbed(4, 1.0, 1); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([] { build_perturbed(4, -0.1, 1); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace wgrect
