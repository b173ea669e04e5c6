#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wgrect/assembly.hpp"
#include "wgrect/solver.hpp"
#include "wgrect/sparse.hpp"

namespace wgrect {
namespace {

CsrMatrix from_dense(const std::vector<double>& d, int n) {
  TripletBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (d[i * n + j] != 0.0) b.add(i, j, d[i * n + j]);
    }
  }
  return b.build();
}

// B^T B + n I with B uniform in [-1, 1].
std::vector<double> random_spd(SplitMix64& g, int n) {
  std::vector<double> b(n * n), a(n * n, 0.0);
  for (double& v : b) v = 2.0 * g.uniform01() - 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) a[i * n + j] += b[k * n + i] * b[k * n + j];
    }
    a[i * n + i] += n;
  }
  return a;
}

TEST(Sparse, BuilderSumsDuplicatesAndSortsColumns) {
  TripletBuilder b(3);
  b.add(2, 1, 1.0);
  b.add(0, 2, 4.0);
  b.add(2, 1, 0.5);
  b.add(0, 0, 1.0);
  b.add(1, 1, 2.0);
  const CsrMatrix a = b.build();
  EXPECT_EQ(a.nnz(), 4);
  EXPECT_EQ(a.row_ptr, (std::vector<std::int64_t>{0, 2, 3, 4}));
  EXPECT_EQ(a.col, (std::vector<int>{0, 2, 1, 1}));
  EXPECT_EQ(a.at(2, 1), 1.5);
  EXPECT_EQ(a.at(1, 0), 0.0);
  EXPECT_EQ(a.diagonal(), (std::vector<double>{1.0, 2.0, 0.0}));
  std::vector<double> y;
  a.multiply(std::vector<double>{1.0, 2.0, 3.0}, y);
  EXPECT_EQ(y, (std::vector<double>{13.0, 4.0, 3.0}));
}

TEST(Sparse, CoordinateOutputRoundTrips) {
  TripletBuilder b(2);
  b.add(0, 0, 0.1);
  b.add(1, 0, -1.0 / 3.0);
  std::ostringstream os;
  write_coordinate(os, b.build());
  std::istringstream is(os.str());
  int i, j;
  double v;
  is >> i >> j >> v;
  EXPECT_EQ(v, 0.1);
  is >> i >> j >> v;
  EXPECT_EQ(i, 1);
  EXPECT_EQ(j, 0);
  EXPECT_EQ(v, -1.0 / 3.0);
}

TEST(Sparse, PairwiseDotMatchesLongDoubleSum) {
  SplitMix64 g(41);
  std::vector<double> x(1000), y(1000);
  long double ref = 0.0L;
  for (int k = 0; k < 1000; ++k) {
    x[k] = g.uniform01();
    y[k] = g.uniform01() - 0.5;
    ref += static_cast<long double>(x[k]) * y[k];
  }
  EXPECT_NEAR(pairwise_dot(x, y), static_cast<double>(ref), 1e-13);
  EXPECT_EQ(pairwise_dot({}, {}), 0.0);
}

TEST(Cg, EmptyAndZeroRightHandSide) {
  const CgResult e = cg_solve(CsrMatrix{}, {});
  EXPECT_TRUE(e.converged);
  EXPECT_EQ(e.iterations, 0);
  const CsrMatrix a = from_dense({2.0, 0.0, 0.0, 3.0}, 2);
  const CgResult z = cg_solve(a, {0.0, 0.0});
  EXPECT_TRUE(z.converged);
  EXPECT_EQ(z.x, (std::vector<double>{0.0, 0.0}));
}

TEST(Cg, IdentityInOneStep) {
  const CsrMatrix a = from_dense({1, 0, 0, 0, 1, 0, 0, 0, 1}, 3);
  const CgResult r = cg_solve(a, {1.0, -2.0, 3.0});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_EQ(r.x, (std::vector<double>{1.0, -2.0, 3.0}));
}

TEST(Cg, AgreesWithCholeskyOnRandomSpd) {
  SplitMix64 g(42);
  for (int n : {1, 2, 5, 10}) {
    const auto d = random_spd(g, n);
    std::vector<double> b(n);
    for (double& v : b) v = g.uniform01();
    const auto want = dense_solve(d, n, b);
    const CgResult r = refined_solve(from_dense(d, n), b);
    ASSERT_TRUE(r.converged);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(r.x[i], want[i], 1e-12);
  }
}

TEST(Cg, HilbertMatrixResidual) {
  const int n = 8;
  std::vector<double> h(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h[i * n + j] = 1.0 / (i + j + 1);
  }
  const std::vector<double> b(n, 1.0);
  const CgResult r = refined_solve(from_dense(h, n), b, 1e-12, 20);
  std::vector<double> ax;
  from_dense(h, n).multiply(r.x, ax);
  double res = 0.0;
  for (int i = 0; i < n; ++i) res = std::max(res, std::abs(ax[i] - b[i]));
  EXPECT_LT(res, 1e-8);
}

TEST(Cg, RejectsIndefiniteAndBadInput) {
  const CsrMatrix neg = from_dense({1.0, 0.0, 0.0, -1.0}, 2);
  EXPECT_EQ(error_code([&] { cg_solve(neg, {1.0, 1.0}); }), ErrorCode::SolverFailure);
  const CsrMatrix indef = from_dense({1.0, 2.0, 2.0, 1.0}, 2);
  EXPECT_EQ(error_code([&] { cg_solve(indef, {1.0, -1.0}); }), ErrorCode::SolverFailure);
  EXPECT_EQ(error_code([&] { cg_solve(indef, {1.0}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([&] { cg_solve(indef, {1.0, 1.0}, 0.0); }),
            ErrorCode::InvalidArgument);
  EXPECT_EQ(error_code([] { dense_solve({1.0, 2.0, 2.0, 1.0}, 2, {1.0, 1.0}); }),
            ErrorCode::SolverFailure);
  EXPECT_EQ(error_code([] { dense_solve({1.0}, 2, {1.0, 1.0}); }),
            ErrorCode::InvalidArgument);
}

TEST(Cg, IterationCapReportsNonConvergence) {
  SplitMix64 g(43);
  const auto d = random_spd(g, 10);
  const CgResult r = cg_solve(from_dense(d, 10), std::vector<double>(10, 1.0), 1e-14, 1);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 1);
}

TEST(Cg, AgreesWithCholeskyOnAssembledSystems) {
  for (int n : {2, 4, 8, 16}) {
    for (const char* id : {"1", "4", "11"}) {
      const AssembledSystem sys = assemble(build_uniform(n, n), get_case(id), {});
      const int m = sys.system.size();
      const auto want = dense_solve(sys.system.a.to_dense(), m, sys.system.rhs);
      const CgResult r = refined_solve(sys.system.a, sys.system.rhs);
      ASSERT_TRUE(r.converged);
      for (int i = 0; i < m; ++i) EXPECT_NEAR(r.x[i], want[i], 1e-10) << id << " n=" << n;
    }
  }
}

TEST(Cg, Deterministic) {
  const AssembledSystem sys = assemble(build_uniform(16, 16), get_case("10"), {});
  const CgResult a = refined_solve(sys.system.a, sys.system.rhs);
  const CgResult b = refined_solve(sys.system.a, sys.system.rhs);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.iterations, b.iterations);
}

}  // namespace
}  // namespace wgrect
