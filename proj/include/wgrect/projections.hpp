#pragma once

#include "wgrect/mesh.hpp"
#include "wgrect/quadrature.hpp"
#include "wgrect/types.hpp"

namespace wgrect {

/// p(x, y) = a0 + a1 (x - x_c) + a2 (y - y_c) on one cell.
struct P1Coeffs {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

/// Edge average Q_b f = (1/|e|) * integral of f over e.
double q_b(const ScalarField& f, const EdgeGeom& edge, const GaussRule& rule);

/// L2 projection onto P1(T). {1, x - x_c, y - y_c} is L2-orthogonal on a
/// rectangle, so each coefficient is a single moment ratio.
P1Coeffs q_0(const ScalarField& f, const CellGeom& cell, const GaussRule& rule);

/// Cell average of a vector field (L2 projection onto constant vectors).
Vec2 q_h_grad(const VectorField& grad_u, const CellGeom& cell,
              const GaussRule& rule);

}  // namespace wgrect
