#pragma once

#include <array>

#include "wgrect/mesh.hpp"
#include "wgrect/quadrature.hpp"
#include "wgrect/types.hpp"

namespace wgrect {

/// Edge constants (v_b1, v_b2, v_b3, v_b4) in e1..e4 order.
using EdgeValues = std::array<double, 4>;
using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

/// Linear function c1 + c2 (x - x_c) + c3 (y - y_c) on one cell.
struct ExtensionCoeffs {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double operator()(const CellGeom& cell, Vec2 p) const noexcept {
    return c1 + c2 * (p.x - cell.center.x) + c3 * (p.y - cell.center.y);
  }
  Vec2 gradient() const noexcept { return {c2, c3}; }
};

/// How a variable diffusion tensor enters the local stiffness.
enum class CoefficientRule {
  CellAverage,  // (1/|T|) * integral of a over T, by the cell Gauss rule
  Center,       // a(x_c, y_c)
};

/// Discrete weak gradient of piecewise-constant edge values:
/// ((v2 - v1) / hx, (v4 - v3) / hy).
Vec2 weak_gradient(const CellGeom& cell, const EdgeValues& v) noexcept;

/// Least-squares linear lift S(v_b) of the edge values, i.e. the P1 function
/// with sum_s |e_s| (S(v_b)(M_s) - v_s) phi(M_s) = 0 for every linear phi.
/// Its gradient coincides with weak_gradient.
ExtensionCoeffs extension(const CellGeom& cell, const EdgeValues& v) noexcept;

/// S applied to the four unit edge-value vectors.
std::array<ExtensionCoeffs, 4> extension_basis(const CellGeom& cell) noexcept;

/// D(v) = v3 + v4 - v1 - v2. The stabilizer is proportional to D(u) D(v).
double midpoint_defect(const EdgeValues& v) noexcept;

/// |T| G^T a G with G the 2x4 weak-gradient map.
/// Throws Error(InvalidCoefficient) if a is not symmetric positive definite.
Mat4 local_stiffness(const CellGeom& cell, const Tensor2& a);

/// sigma * d d^T with d = (-1, -1, 1, 1) and
/// sigma = rho / h * hx * hy / (2 (hx + hy)).
Mat4 local_stabilizer(const CellGeom& cell, double rho, double h);

/// F_s = integral over T of f * phi_s, phi_s = S(unit vector s).
Vec4 local_load(const CellGeom& cell, const ScalarField& f, const GaussRule& rule);

/// R_st = integral over T of c * phi_s * phi_t.
Mat4 local_reaction(const CellGeom& cell, const ScalarField& c,
                    const GaussRule& rule);

/// The diffusion tensor used on a cell under the given rule.
Tensor2 cell_coefficient(const CellGeom& cell, const TensorField& a,
                         CoefficientRule rule, const GaussRule& quad);

}  // namespace wgrect
