#include "wgrect/projections.hpp"

namespace wgrect {

double q_b(const ScalarField& f, const EdgeGeom& edge, const GaussRule& rule) {
  if (edge.orientation == Orientation::Vertical) {
    const double x = edge.start.x;
    return integrate_interval(rule, edge.start.y, edge.end.y,
                              [&](double y) { return f(x, y); }) /
           (edge.end.y - edge.start.y);
  }
  const double y = edge.start.y;
  return integrate_interval(rule, edge.start.x, edge.end.x,
                            [&](double x) { return f(x, y); }) /
         (edge.end.x - edge.start.x);
}

P1Coeffs q_0(const ScalarField& f, const CellGeom& cell, const GaussRule& rule) {
  double m0 = 0.0;
  double mx = 0.0;
  double my = 0.0;
  const double hx = 0.5 * cell.hx;
  const double hy = 0.5 * cell.hy;
  for (int q = 0; q < rule.size(); ++q) {
    const double dy = hy * rule.nodes[q];
    for (int p = 0; p < rule.size(); ++p) {
      const double dx = hx * rule.nodes[p];
      const double w = rule.weights[p] * rule.weights[q];
      const double v = w * f(cell.center.x + dx, cell.center.y + dy);
      m0 += v;
      mx += v * dx;
      my += v * dy;
    }
  }
  // integral f (x - x_c) = |T| mx / 4 and integral (x - x_c)^2 = |T| hx^2 / 12.
  return {m0 / 4.0, 3.0 * mx / (cell.hx * cell.hx),
          3.0 * my / (cell.hy * cell.hy)};
}

Vec2 q_h_grad(const VectorField& grad_u, const CellGeom& cell,
              const GaussRule& rule) {
  Vec2 sum;
  const double hx = 0.5 * cell.hx;
  const double hy = 0.5 * cell.hy;
  for (int q = 0; q < rule.size(); ++q) {
    for (int p = 0; p < rule.size(); ++p) {
      const double w = 0.25 * rule.weights[p] * rule.weights[q];
      const Vec2 g = grad_u(cell.center.x + hx * rule.nodes[p],
                            cell.center.y + hy * rule.nodes[q]);
      sum.x += w * g.x;
      sum.y += w * g.y;
    }
  }
  return sum;
}

}  // namespace wgrect
