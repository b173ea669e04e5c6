#include <cmath>

#include <gtest/gtest.h>

#include "wgrect/error.hpp"
#include "wgrect/quadrature.hpp"

namespace wgrect {
namespace {

TEST(GaussLegendre, WeightsSumToTwo) {
  for (int n = 1; n <= 12; ++n) {
    const GaussRule r = gauss_legendre(n);
    ASSERT_EQ(r.size(), n);
    double s = 0.0;
    for (double w : r.weights) s += w;
    EXPECT_NEAR(s, 2.0, 1e-14) << n;
  }
}

TEST(GaussLegendre, ExactForDegreeTwoNMinusOne) {
  for (int n = 1; n <= 10; ++n) {
    const GaussRule r = gauss_legendre(n);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
      const double got = integrate_interval(r, -1.0, 1.0,
                                            [p](double x) { return std::pow(x, p); });
      EXPECT_NEAR(got, exact, 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, NodesSymmetricAndSorted) {
  const GaussRule r = gauss_legendre(7);
  for (int k = 0; k < 7; ++k) {
    EXPECT_DOUBLE_EQ(r.nodes[k], -r.nodes[6 - k]);
    EXPECT_DOUBLE_EQ(r.weights[k], r.weights[6 - k]);
    if (k > 0) EXPECT_LT(r.nodes[k - 1], r.nodes[k]);
  }
  EXPECT_EQ(r.nodes[3], 0.0);
}

TEST(GaussLegendre, TwoPointRuleKnownValues) {
  const GaussRule r = gauss_legendre(2);
  EXPECT_NEAR(r.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
}

TEST(GaussLegendre, RejectsNonPositiveOrder) {
  try {
    gauss_legendre(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(IntegrateRect, MonomialOnOffsetRectangle) {
  const GaussRule r = gauss_legendre(3);
  // integral over [1,3]x[-1,2] of x^2 y^3 = (26/3) * (15/4)
  const double got = integrate_rect(r, 1.0, 3.0, -1.0, 2.0,
                                    [](double x, double y) { return x * x * y * y * y; });
  EXPECT_NEAR(got, 26.0 / 3.0 * 15.0 / 4.0, 1e-12);
}

}  // namespace
}  // namespace wgrect
