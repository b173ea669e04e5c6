#include "wgrect/cases.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wgrect/error.hpp"

namespace wgrect {

namespace {

using std::cos;
using std::exp;
using std::sin;
constexpr double pi = std::numbers::pi;

TensorField constant_tensor(Tensor2 a) {
  return [a](double, double) { return a; };
}

ProblemCase patch_case() {
  ProblemCase pc;
  pc.id = "patch";
  pc.description = "u = 1 + 2x - 3y, a = I";
  pc.a = constant_tensor({1.0, 0.0, 1.0});
  pc.u = [](double x, double y) { return 1.0 + 2.0 * x - 3.0 * y; };
  pc.grad_u = [](double, double) { return Vec2{2.0, -3.0}; };
  pc.hessian_u = [](double, double) { return Tensor2{}; };
  pc.f = [](double, double) { return 0.0; };
  return pc;
}

ProblemCase case1() {
  ProblemCase pc;
  pc.id = "1";
  pc.description = "u = sin(pi x) sin(pi y), a = I";
  pc.a = constant_tensor({1.0, 0.0, 1.0});
  pc.u = [](double x, double y) { return sin(pi * x) * sin(pi * y); };
  pc.grad_u = [](double x, double y) {
    return Vec2{pi * cos(pi * x) * sin(pi * y), pi * sin(pi * x) * cos(pi * y)};
  };
  pc.hessian_u = [](double x, double y) {
    const double u = sin(pi * x) * sin(pi * y);
    return Tensor2{-pi * pi * u, pi * pi * cos(pi * x) * cos(pi * y), -pi * pi * u};
  };
  pc.f = [](double x, double y) {
    return 2.0 * pi * pi * sin(pi * x) * sin(pi * y);
  };
  pc.homogeneous_dirichlet = true;
  return pc;
}

ProblemCase case2() {
  ProblemCase pc;
  pc.id = "2";
  pc.description = "u = sin(x) cos(y), a = I";
  pc.a = constant_tensor({1.0, 0.0, 1.0});
  pc.u = [](double x, double y) { return sin(x) * cos(y); };
  pc.grad_u = [](double x, double y) {
    return Vec2{cos(x) * cos(y), -sin(x) * sin(y)};
  };
  pc.hessian_u = [](double x, double y) {
    const double u = sin(x) * cos(y);
    return Tensor2{-u, -cos(x) * sin(y), -u};
  };
  pc.f = [](double x, double y) { return 2.0 * sin(x) * cos(y); };
  return pc;
}

ProblemCase case3() {
  ProblemCase pc;
  pc.id = "3";
  pc.description = "u = exp(x) sin(y), a = I, harmonic";
  pc.a = constant_tensor({1.0, 0.0, 1.0});
  pc.u = [](double x, double y) { return exp(x) * sin(y); };
  pc.grad_u = [](double x, double y) {
    return Vec2{exp(x) * sin(y), exp(x) * cos(y)};
  };
  pc.hessian_u = [](double x, double y) {
    const double u = exp(x) * sin(y);
    return Tensor2{u, exp(x) * cos(y), -u};
  };
  pc.f = [](double, double) { return 0.0; };
  return pc;
}

ProblemCase case4() {
  ProblemCase pc;
  pc.id = "4";
  pc.description = "u = sin(x) sin(y), a = [3 1; 1 2]";
  pc.a = constant_tensor({3.0, 1.0, 2.0});
  pc.u = [](double x, double y) { return sin(x) * sin(y); };
  pc.grad_u = [](double x, double y) {
    return Vec2{cos(x) * sin(y), sin(x) * cos(y)};
  };
  pc.hessian_u = [](double x, double y) {
    const double u = sin(x) * sin(y);
    return Tensor2{-u, cos(x) * cos(y), -u};
  };
  pc.f = [](double x, double y) {
    return 5.0 * sin(x) * sin(y) - 2.0 * cos(x) * cos(y);
  };
  pc.diagonal_on_boundary = false;
  return pc;
}

// Cases 5, 6 and 7 share the solution and differ only in the mesh family.
ProblemCase cos_sin_case(const char* id) {
  ProblemCase pc;
  pc.id = id;
  pc.description = "u = cos(pi x) sin(pi y), a = I";
  pc.a = constant_tensor({1.0, 0.0, 1.0});
  pc.u = [](double x, double y) { return cos(pi * x) * sin(pi * y); };
  pc.grad_u = [](double x, double y) {
    return Vec2{-pi * sin(pi * x) * sin(pi * y), pi * cos(pi * x) * cos(pi * y)};
  };
  pc.hessian_u = [](double x, double y) {
    const double u = cos(pi * x) * sin(pi * y);
    return Tensor2{-pi * pi * u, -pi * pi * sin(pi * x) * cos(pi * y),
                   -pi * pi * u};
  };
  pc.f = [](double x, double y) {
    return 2.0 * pi * pi * cos(pi * x) * sin(pi * y);
  };
  return pc;
}

// Four-quadrant checkerboard on (-1, 1)^2 with (alpha_x, alpha_y, alpha).
struct Quadrant {
  double ax, ay, alpha;
};

Quadrant quadrant(double x, double y) {
  static constexpr std::array<Quadrant, 4> q{{
      {100.0, 10.0, 0.1},    // lower left
      {1.0, 0.1, 10.0},      // lower right
      {1000.0, 100.0, 0.01}, // upper right
      {0.1, 0.01, 100.0},    // upper left
  }};
  const bool right = x >= 0.0;
  const bool upper = y >= 0.0;
  if (!upper) return right ? q[1] : q[0];
  return right ? q[2] : q[3];
}

ProblemCase case8() {
  ProblemCase pc;
  pc.id = "8";
  pc.description = "four-quadrant anisotropic checkerboard on (-1,1)^2";
  pc.domain = {-1.0, 1.0, -1.0, 1.0};
  pc.a = [](double x, double y) {
    const Quadrant q = quadrant(x, y);
    return Tensor2{q.ax, 0.0, q.ay};
  };
  pc.u = [](double x, double y) {
    return quadrant(x, y).alpha * sin(2 * pi * x) * sin(2 * pi * y);
  };
  pc.grad_u = [](double x, double y) {
    const double s = 2.0 * pi * quadrant(x, y).alpha;
    return Vec2{s * cos(2 * pi * x) * sin(2 * pi * y),
                s * sin(2 * pi * x) * cos(2 * pi * y)};
  };
  pc.hessian_u = [](double x, double y) {
    const double s = 4.0 * pi * pi * quadrant(x, y).alpha;
    const double u = sin(2 * pi * x) * sin(2 * pi * y);
    return Tensor2{-s * u, s * cos(2 * pi * x) * cos(2 * pi * y), -s * u};
  };
  pc.f = [](double x, double y) {
    const Quadrant q = quadrant(x, y);
    return (q.ax + q.ay) * 4.0 * pi * pi * q.alpha * sin(2 * pi * x) *
           sin(2 * pi * y);
  };
  pc.interface_x = {0.0};
  pc.interface_y = {0.0};
  pc.homogeneous_dirichlet = true;
  return pc;
}

ProblemCase case9() {
  ProblemCase pc;
  pc.id = "9";
  pc.description = "piecewise quadratic, a = I for x < 1/2 and [10 3; 3 1] beyond";
  pc.a = [](double x, double) {
    return x < 0.5 ? Tensor2{1.0, 0.0, 1.0} : Tensor2{10.0, 3.0, 1.0};
  };
  pc.u = [](double x, double y) {
    if (x < 0.5) return 1.0 - 2.0 * y * y + 4.0 * x * y + 6.0 * x + 2.0 * y;
    return -2.0 * y * y + 1.6 * x * y - 0.6 * x + 3.2 * y + 4.3;
  };
  pc.grad_u = [](double x, double y) {
    if (x < 0.5) return Vec2{4.0 * y + 6.0, -4.0 * y + 4.0 * x + 2.0};
    return Vec2{1.6 * y - 0.6, -4.0 * y + 1.6 * x + 3.2};
  };
  pc.hessian_u = [](double x, double) {
    if (x < 0.5) return Tensor2{0.0, 4.0, -4.0};
    return Tensor2{0.0, 1.6, -4.0};
  };
  pc.f = [](double x, double) { return x < 0.5 ? 4.0 : -5.6; };
  pc.interface_x = {0.5};
  pc.diagonal_on_boundary = false;
  return pc;
}

ProblemCase case10() {
  ProblemCase pc;
  pc.id = "10";
  pc.description = "u = sin(x) sin(y), a = [1+e^y 1/2; 1/2 1+e^x]";
  pc.a = [](double x, double y) {
    return Tensor2{1.0 + exp(y), 0.5, 1.0 + exp(x)};
  };
  pc.u = [](double x, double y) { return sin(x) * sin(y); };
  pc.grad_u = [](double x, double y) {
    return Vec2{cos(x) * sin(y), sin(x) * cos(y)};
  };
  pc.hessian_u = [](double x, double y) {
    const double u = sin(x) * sin(y);
    return Tensor2{-u, cos(x) * cos(y), -u};
  };
  pc.f = [](double x, double y) {
    return (2.0 + exp(x) + exp(y)) * sin(x) * sin(y) - cos(x) * cos(y);
  };
  pc.diagonal_on_boundary = false;
  return pc;
}

ProblemCase case11() {
  ProblemCase pc;
  pc.id = "11";
  pc.description = "u = 2 sin(2 pi x) sin(3 pi y), full variable tensor, c = 2+x+y";
  pc.a = [](double x, double y) {
    return Tensor2{1.0 + exp(2 * x) + y * y * y, exp(x + y),
                   1.0 + exp(2 * y) + x * x * x};
  };
  pc.c = [](double x, double y) { return 2.0 + x + y; };
  pc.u = [](double x, double y) { return 2.0 * sin(2 * pi * x) * sin(3 * pi * y); };
  pc.grad_u = [](double x, double y) {
    return Vec2{4.0 * pi * cos(2 * pi * x) * sin(3 * pi * y),
                6.0 * pi * sin(2 * pi * x) * cos(3 * pi * y)};
  };
  pc.hessian_u = [](double x, double y) {
    const double ss = sin(2 * pi * x) * sin(3 * pi * y);
    return Tensor2{-8.0 * pi * pi * ss,
                   12.0 * pi * pi * cos(2 * pi * x) * cos(3 * pi * y),
                   -18.0 * pi * pi * ss};
  };
  pc.f = [](double x, double y) {
    const double sx = sin(2 * pi * x), cx = cos(2 * pi * x);
    const double sy = sin(3 * pi * y), cy = cos(3 * pi * y);
    const double ux = 4.0 * pi * cx * sy;
    const double uy = 6.0 * pi * sx * cy;
    const double uxx = -8.0 * pi * pi * sx * sy;
    const double uyy = -18.0 * pi * pi * sx * sy;
    const double uxy = 12.0 * pi * pi * cx * cy;
    const double a11 = 1.0 + exp(2 * x) + y * y * y;
    const double a12 = exp(x + y);
    const double a22 = 1.0 + exp(2 * y) + x * x * x;
    const double dq1 = 2.0 * exp(2 * x) * ux + a11 * uxx + a12 * uy + a12 * uxy;
    const double dq2 = a12 * ux + a12 * uxy + 2.0 * exp(2 * y) * uy + a22 * uyy;
    return -(dq1 + dq2) + (2.0 + x + y) * 2.0 * sx * sy;
  };
  pc.diagonal_on_boundary = false;
  pc.homogeneous_dirichlet = true;
  return pc;
}

Vec2 flux(const ProblemCase& pc, double x, double y) {
  const Tensor2 a = pc.a(x, y);
  const Vec2 g = pc.grad_u(x, y);
  return {a.xx * g.x + a.xy * g.y, a.xy * g.x + a.yy * g.y};
}

// Fourth-order central difference of s -> f(s) at 0.
template <class F>
double d4(F&& f, double h) {
  return (-f(2 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2 * h)) / (12.0 * h);
}

bool near_interface(const ProblemCase& pc, double x, double y, double dist) {
  for (double xi : pc.interface_x) {
    if (std::abs(x - xi) <= dist) return true;
  }
  for (double yi : pc.interface_y) {
    if (std::abs(y - yi) <= dist) return true;
  }
  return false;
}

}  // namespace

double ProblemCase::g_tt(Orientation side, double x, double y) const {
  if (homogeneous_dirichlet) return 0.0;
  const Tensor2 h = hessian_u(x, y);
  return side == Orientation::Vertical ? h.yy : h.xx;
}

ProblemCase get_case(std::string_view id) {
  if (id == "patch") return patch_case();
  if (id == "1") return case1();
  if (id == "2") return case2();
  if (id == "3") return case3();
  if (id == "4") return case4();
  if (id == "5" || id == "6" || id == "7") {
    return cos_sin_case(id == "5" ? "5" : id == "6" ? "6" : "7");
  }
  if (id == "8") return case8();
  if (id == "9") return case9();
  if (id == "10") return case10();
  if (id == "11") return case11();
  throw Error(ErrorCode::UnknownCase, "unknown case id '" + std::string(id) + "'");
}

std::vector<std::string> case_ids() {
  return {"patch", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11"};
}

ResidualCheck pde_residual(const ProblemCase& pc, int samples, double step) {
  ResidualCheck out;
  const Domain& d = pc.domain;
  for (int q = 0; q < samples; ++q) {
    const double y = d.y_min + (d.y_max - d.y_min) * (q + 0.5) / samples;
    for (int p = 0; p < samples; ++p) {
      const double x = d.x_min + (d.x_max - d.x_min) * (p + 0.5) / samples;
      if (near_interface(pc, x, y, 2.5 * step)) continue;
      const double div =
          d4([&](double s) { return flux(pc, x + s, y).x; }, step) +
          d4([&](double s) { return flux(pc, x, y + s).y; }, step);
      double r = -div - pc.f(x, y);
      if (pc.has_reaction()) r += pc.c(x, y) * pc.u(x, y);
      const double scaled = std::abs(r) / std::max(1.0, std::abs(pc.f(x, y)));
      if (scaled > out.max_residual) {
        out.max_residual = scaled;
        out.worst = {x, y};
      }
    }
  }
  return out;
}

ScalarField validated_source(const ProblemCase& pc, double tol, double step) {
  const ResidualCheck rc = pde_residual(pc, 17, step);
  if (!(rc.max_residual <= tol)) {
    throw Error(ErrorCode::CaseDefinition,
                "case " + pc.id + ": source does not match the PDE (residual " +
                    std::to_string(rc.max_residual) + " at (" +
                    std::to_string(rc.worst.x) + ", " +
                    std::to_string(rc.worst.y) + "))");
  }
  return pc.f;
}

InterfaceJumps interface_jumps(const ProblemCase& pc, int samples) {
  constexpr double eps = 1e-12;
  InterfaceJumps out;
  const Domain& d = pc.domain;
  auto record = [&](double du, double dq) {
    out.max_value_jump = std::max(out.max_value_jump, std::abs(du));
    out.max_flux_jump = std::max(out.max_flux_jump, std::abs(dq));
  };
  for (double xi : pc.interface_x) {
    for (int k = 0; k < samples; ++k) {
      const double y = d.y_min + (d.y_max - d.y_min) * (k + 0.5) / samples;
      const double xl = xi - eps, xr = xi + eps;
      record(pc.u(xr, y) - pc.u(xl, y), flux(pc, xr, y).x - flux(pc, xl, y).x);
    }
  }
  for (double yi : pc.interface_y) {
    for (int k = 0; k < samples; ++k) {
      const double x = d.x_min + (d.x_max - d.x_min) * (k + 0.5) / samples;
      const double yb = yi - eps, yt = yi + eps;
      record(pc.u(x, yt) - pc.u(x, yb), flux(pc, x, yt).y - flux(pc, x, yb).y);
    }
  }
  return out;
}

}  // namespace wgrect
