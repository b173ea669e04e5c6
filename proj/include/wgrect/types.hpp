#pragma once

#include <functional>

namespace wgrect {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Symmetric 2x2 tensor [xx xy; xy yy].
struct Tensor2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  bool is_positive_definite() const noexcept {
    return xx > 0.0 && xx * yy - xy * xy > 0.0;
  }
  bool is_diagonal() const noexcept { return xy == 0.0; }
};

using ScalarField = std::function<double(double, double)>;
using VectorField = std::function<Vec2(double, double)>;
using TensorField = std::function<Tensor2(double, double)>;

}  // namespace wgrect
