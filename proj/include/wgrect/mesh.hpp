#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wgrect/types.hpp"

namespace wgrect {

struct Domain {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  double area() const noexcept { return (x_max - x_min) * (y_max - y_min); }
  friend bool operator==(const Domain&, const Domain&) = default;
};

inline constexpr Domain kUnitSquare{0.0, 1.0, 0.0, 1.0};

enum class Orientation { Vertical, Horizontal };

/// Local edge slots of a rectangle: e1 left, e2 right, e3 bottom, e4 top.
enum EdgeSlot : int { kLeft = 0, kRight = 1, kBottom = 2, kTop = 3 };

/// One rectangular element [x0, x1] x [y0, y1].
///
/// Vertical edges (e1, e2) have length hy and horizontal edges (e3, e4) have
/// length hx.
struct CellGeom {
  int i = 0;  // column, 0-based
  int j = 0;  // row, 0-based
  double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;
  double hx = 0.0;
  double hy = 0.0;
  Vec2 center;
  std::array<int, 4> edges{};  // global edge ids in e1..e4 order

  double area() const noexcept { return hx * hy; }
  /// Midpoint M_s of local edge s.
  Vec2 midpoint(int slot) const noexcept;
};

struct EdgeIndex {
  Orientation orientation = Orientation::Vertical;
  // Vertical: grid line i (x = xs[i]), row j. Horizontal: column i, grid line j.
  int i = 0;
  int j = 0;
  int id = 0;
  bool boundary = false;
  std::optional<int> dof;  // present iff interior
};

struct EdgeGeom {
  Orientation orientation = Orientation::Vertical;
  Vec2 start;
  Vec2 end;

  double length() const noexcept;
  Vec2 midpoint() const noexcept;
};

enum class SizeMeasure {
  MaxEdge,      // max over cells of max(hx, hy)
  MeanEdge,     // max over cells of (hx + hy) / 2
  MaxDiameter,  // max over cells of sqrt(hx^2 + hy^2)
  InverseN,     // 1 / (number of cells along x)
};

/// Tensor-product partition xs x ys of an axis-aligned rectangle.
///
/// Edge ids: vertical edges first, id = j * (nx + 1) + i; then horizontal
/// edges, id = V + j * nx + i. Interior edges get dofs in increasing id order.
/// Immutable after construction.
class Mesh {
public:
  /// Throws Error(InvalidArgument) unless both lists have >= 2 strictly
  /// increasing finite entries.
  Mesh(std::vector<double> xs, std::vector<double> ys);

  int nx() const noexcept { return static_cast<int>(xs_.size()) - 1; }
  int ny() const noexcept { return static_cast<int>(ys_.size()) - 1; }
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }
  Domain domain() const noexcept;

  int num_cells() const noexcept { return nx() * ny(); }
  int num_vertical_edges() const noexcept { return (nx() + 1) * ny(); }
  int num_horizontal_edges() const noexcept { return nx() * (ny() + 1); }
  int num_edges() const noexcept {
    return num_vertical_edges() + num_horizontal_edges();
  }
  int num_dofs() const noexcept { return static_cast<int>(dof_edge_.size()); }

  int vertical_edge(int i, int j) const noexcept { return j * (nx() + 1) + i; }
  int horizontal_edge(int i, int j) const noexcept {
    return num_vertical_edges() + j * nx() + i;
  }

  CellGeom cell(int i, int j) const;
  /// All cells, row-major (i fastest).
  std::vector<CellGeom> cells() const;

  EdgeIndex edge(int id) const;
  std::vector<EdgeIndex> edges() const;
  EdgeGeom edge_geometry(int id) const;
  bool is_boundary_edge(int id) const;

  /// -1 for boundary edges.
  int dof_of_edge(int id) const noexcept { return edge_dof_[id]; }
  int edge_of_dof(int dof) const noexcept { return dof_edge_[dof]; }

  double size(SizeMeasure measure) const;

  friend bool operator==(const Mesh& a, const Mesh& b) {
    return a.xs_ == b.xs_ && a.ys_ == b.ys_;
  }

private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<int> edge_dof_;
  std::vector<int> dof_edge_;
};

/// n x m equispaced cells. Throws Error(InvalidArgument) on zero counts or a
/// degenerate domain.
Mesh build_uniform(int n, int m, const Domain& domain = kUnitSquare);

/// Graded unit-square mesh: step 0.5/n1 on [0, 0.5] and half that step on
/// [0.5, 1], independently per axis. Throws Error(UnsupportedDomain) for any
/// domain other than the unit square.
Mesh build_graded_half(int n1x, int n1y, const Domain& domain = kUnitSquare);

/// Uniform n x n mesh on the unit square whose interior grid lines are
/// shifted by amplitude * (U - 0.5) / n, U ~ uniform[0, 1) from SplitMix64.
/// x lines 1..n-1 draw first, then y lines 1..n-1. Boundary lines stay fixed.
Mesh build_perturbed(int n, double amplitude, std::uint64_t seed);

/// Splits every interval of xs and ys at its midpoint.
Mesh refine_bisect(const Mesh& mesh);

/// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
/// two xor-shift-multiply rounds.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Top 53 bits scaled into [0, 1).
  double uniform01() noexcept;

private:
  std::uint64_t state_;
};

}  // namespace wgrect
