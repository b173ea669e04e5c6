#include "wgrect/local.hpp"

#include "wgrect/error.hpp"

namespace wgrect {

Vec2 weak_gradient(const CellGeom& cell, const EdgeValues& v) noexcept {
  return {(v[kRight] - v[kLeft]) / cell.hx, (v[kTop] - v[kBottom]) / cell.hy};
}

ExtensionCoeffs extension(const CellGeom& cell, const EdgeValues& v) noexcept {
  const double hx = cell.hx;
  const double hy = cell.hy;
  // Vertical edges carry weight |e1| = hy, horizontal ones |e3| = hx.
  const double c1 =
      (hy * (v[kLeft] + v[kRight]) + hx * (v[kBottom] + v[kTop])) /
      (2.0 * (hx + hy));
  const Vec2 g = weak_gradient(cell, v);
  return {c1, g.x, g.y};
}

std::array<ExtensionCoeffs, 4> extension_basis(const CellGeom& cell) noexcept {
  std::array<ExtensionCoeffs, 4> basis{};
  for (int s = 0; s < 4; ++s) {
    EdgeValues unit{};
    unit[s] = 1.0;
    basis[s] = extension(cell, unit);
  }
  return basis;
}

double midpoint_defect(const EdgeValues& v) noexcept {
  return v[kBottom] + v[kTop] - v[kLeft] - v[kRight];
}

Mat4 local_stiffness(const CellGeom& cell, const Tensor2& a) {
  if (!a.is_positive_definite()) {
    throw Error(ErrorCode::InvalidCoefficient,
                "local_stiffness: diffusion tensor is not positive definite");
  }
  // Rows of G^T: d(grad)/d(v_s).
  const std::array<Vec2, 4> g{Vec2{-1.0 / cell.hx, 0.0}, Vec2{1.0 / cell.hx, 0.0},
                              Vec2{0.0, -1.0 / cell.hy}, Vec2{0.0, 1.0 / cell.hy}};
  const double area = cell.area();
  Mat4 k{};
  for (int s = 0; s < 4; ++s) {
    const Vec2 ag{a.xx * g[s].x + a.xy * g[s].y, a.xy * g[s].x + a.yy * g[s].y};
    for (int t = 0; t < 4; ++t) {
      k[s][t] = area * (ag.x * g[t].x + ag.y * g[t].y);
    }
  }
  return k;
}

Mat4 local_stabilizer(const CellGeom& cell, double rho, double h) {
  if (!(rho > 0.0) || !(h > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "local_stabilizer: rho and h must be positive");
  }
  const double sigma =
      rho / h * cell.hx * cell.hy / (2.0 * (cell.hx + cell.hy));
  constexpr std::array<double, 4> d{-1.0, -1.0, 1.0, 1.0};
  Mat4 s{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) s[a][b] = sigma * d[a] * d[b];
  }
  return s;
}

Vec4 local_load(const CellGeom& cell, const ScalarField& f,
                const GaussRule& rule) {
  const auto basis = extension_basis(cell);
  Vec4 out{};
  for (int s = 0; s < 4; ++s) {
    out[s] = integrate_rect(rule, cell.x0, cell.x1, cell.y0, cell.y1,
                            [&](double x, double y) {
                              return f(x, y) * basis[s](cell, {x, y});
                            });
  }
  return out;
}

Mat4 local_reaction(const CellGeom& cell, const ScalarField& c,
                    const GaussRule& rule) {
  const auto basis = extension_basis(cell);
  Mat4 r{};
  for (int s = 0; s < 4; ++s) {
    for (int t = s; t < 4; ++t) {
      r[s][t] = integrate_rect(rule, cell.x0, cell.x1, cell.y0, cell.y1,
                               [&](double x, double y) {
                                 return c(x, y) * basis[s](cell, {x, y}) *
                                        basis[t](cell, {x, y});
                               });
      r[t][s] = r[s][t];
    }
  }
  return r;
}

Tensor2 cell_coefficient(const CellGeom& cell, const TensorField& a,
                         CoefficientRule rule, const GaussRule& quad) {
  const Tensor2 ac = a(cell.center.x, cell.center.y);
  if (rule == CoefficientRule::Center) return ac;
  // Average the deviation from the center value so that constant tensors come
  // back bit-exact; the Gauss weights do not sum to 1 in floating point.
  Tensor2 dev;
  const double hx = 0.5 * cell.hx;
  const double hy = 0.5 * cell.hy;
  for (int q = 0; q < quad.size(); ++q) {
    const double y = cell.center.y + hy * quad.nodes[q];
    for (int p = 0; p < quad.size(); ++p) {
      const double w = 0.25 * quad.weights[p] * quad.weights[q];
      const Tensor2 v = a(cell.center.x + hx * quad.nodes[p], y);
      dev.xx += w * (v.xx - ac.xx);
      dev.xy += w * (v.xy - ac.xy);
      dev.yy += w * (v.yy - ac.yy);
    }
  }
  return {ac.xx + dev.xx, ac.xy + dev.xy, ac.yy + dev.yy};
}

}  // namespace wgrect
