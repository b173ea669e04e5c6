#pragma once

#include <vector>

namespace wgrect {

/// Gauss-Legendre rule on the reference interval [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const noexcept { return static_cast<int>(nodes.size()); }
};

/// n-point Gauss-Legendre rule (exact for polynomials of degree 2n-1).
/// Throws Error(InvalidArgument) for n < 1.
GaussRule gauss_legendre(int n);

template <class F>
double integrate_interval(const GaussRule& rule, double a, double b, F&& f) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int k = 0; k < rule.size(); ++k) {
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return half * sum;
}

/// Tensor-product rule over [x0, x1] x [y0, y1].
template <class F>
double integrate_rect(const GaussRule& rule, double x0, double x1, double y0,
                      double y1, F&& f) {
  const double hx = 0.5 * (x1 - x0);
  const double hy = 0.5 * (y1 - y0);
  const double xm = 0.5 * (x0 + x1);
  const double ym = 0.5 * (y0 + y1);
  double sum = 0.0;
  for (int q = 0; q < rule.size(); ++q) {
    const double y = ym + hy * rule.nodes[q];
    double row = 0.0;
    for (int p = 0; p < rule.size(); ++p) {
      row += rule.weights[p] * f(xm + hx * rule.nodes[p], y);
    }
    sum += rule.weights[q] * row;
  }
  return hx * hy * sum;
}

}  // namespace wgrect
