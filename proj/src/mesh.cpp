#include "wgrect/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wgrect/error.hpp"

namespace wgrect {

namespace {

void validate_axis(const std::vector<double>& v, const char* name) {
  if (v.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("Mesh: ") + name + " needs at least two coordinates");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!std::isfinite(v[k])) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("Mesh: non-finite coordinate in ") + name);
    }
    if (k > 0 && !(v[k] > v[k - 1])) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("Mesh: ") + name + " must be strictly increasing");
    }
  }
}

std::vector<double> equispaced(int n, double lo, double hi) {
  std::vector<double> v(n + 1);
  for (int k = 0; k <= n; ++k) v[k] = lo + (hi - lo) * k / n;
  v[n] = hi;
  return v;
}

std::vector<double> graded_axis(int n1) {
  const double h1 = 0.5 / n1;
  std::vector<double> v;
  v.reserve(3 * n1 + 1);
  for (int k = 0; k < n1; ++k) v.push_back(k * h1);
  for (int k = 0; k < 2 * n1; ++k) v.push_back(0.5 + k * 0.5 * h1);
  v.push_back(1.0);
  return v;
}

std::vector<double> bisect_axis(std::span<const double> v) {
  std::vector<double> out;
  out.reserve(2 * v.size() - 1);
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    out.push_back(v[k]);
    out.push_back(0.5 * (v[k] + v[k + 1]));
  }
  out.push_back(v.back());
  return out;
}

}  // namespace

Vec2 CellGeom::midpoint(int slot) const noexcept {
  switch (slot) {
    case kLeft: return {x0, center.y};
    case kRight: return {x1, center.y};
    case kBottom: return {center.x, y0};
    default: return {center.x, y1};
  }
}

double EdgeGeom::length() const noexcept {
  return std::hypot(end.x - start.x, end.y - start.y);
}

Vec2 EdgeGeom::midpoint() const noexcept {
  return {0.5 * (start.x + end.x), 0.5 * (start.y + end.y)};
}

Mesh::Mesh(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  validate_axis(xs_, "xs");
  validate_axis(ys_, "ys");
  edge_dof_.assign(num_edges(), -1);
  for (int id = 0; id < num_edges(); ++id) {
    if (!is_boundary_edge(id)) {
      edge_dof_[id] = static_cast<int>(dof_edge_.size());
      dof_edge_.push_back(id);
    }
  }
}

Domain Mesh::domain() const noexcept {
  return {xs_.front(), xs_.back(), ys_.front(), ys_.back()};
}

CellGeom Mesh::cell(int i, int j) const {
  CellGeom c;
  c.i = i;
  c.j = j;
  c.x0 = xs_[i];
  c.x1 = xs_[i + 1];
  c.y0 = ys_[j];
  c.y1 = ys_[j + 1];
  c.hx = c.x1 - c.x0;
  c.hy = c.y1 - c.y0;
  c.center = {0.5 * (c.x0 + c.x1), 0.5 * (c.y0 + c.y1)};
  c.edges = {vertical_edge(i, j), vertical_edge(i + 1, j),
             horizontal_edge(i, j), horizontal_edge(i, j + 1)};
  return c;
}

std::vector<CellGeom> Mesh::cells() const {
  std::vector<CellGeom> out;
  out.reserve(num_cells());
  for (int j = 0; j < ny(); ++j) {
    for (int i = 0; i < nx(); ++i) out.push_back(cell(i, j));
  }
  return out;
}

bool Mesh::is_boundary_edge(int id) const {
  const int nv = num_vertical_edges();
  if (id < nv) {
    const int i = id % (nx() + 1);
    return i == 0 || i == nx();
  }
  const int j = (id - nv) / nx();
  return j == 0 || j == ny();
}

EdgeIndex Mesh::edge(int id) const {
  if (id < 0 || id >= num_edges()) {
    throw Error(ErrorCode::InvalidArgument, "Mesh::edge: id out of range");
  }
  EdgeIndex e;
  e.id = id;
  const int nv = num_vertical_edges();
  if (id < nv) {
    e.orientation = Orientation::Vertical;
    e.i = id % (nx() + 1);
    e.j = id / (nx() + 1);
  } else {
    e.orientation = Orientation::Horizontal;
    e.i = (id - nv) % nx();
    e.j = (id - nv) / nx();
  }
  e.boundary = is_boundary_edge(id);
  if (!e.boundary) e.dof = edge_dof_[id];
  return e;
}

std::vector<EdgeIndex> Mesh::edges() const {
  std::vector<EdgeIndex> out;
  out.reserve(num_edges());
  for (int id = 0; id < num_edges(); ++id) out.push_back(edge(id));
  return out;
}

EdgeGeom Mesh::edge_geometry(int id) const {
  const EdgeIndex e = edge(id);
  EdgeGeom g;
  g.orientation = e.orientation;
  if (e.orientation == Orientation::Vertical) {
    g.start = {xs_[e.i], ys_[e.j]};
    g.end = {xs_[e.i], ys_[e.j + 1]};
  } else {
    g.start = {xs_[e.i], ys_[e.j]};
    g.end = {xs_[e.i + 1], ys_[e.j]};
  }
  return g;
}

double Mesh::size(SizeMeasure measure) const {
  double hx_max = 0.0;
  double hy_max = 0.0;
  for (std::size_t k = 0; k + 1 < xs_.size(); ++k) {
    hx_max = std::max(hx_max, xs_[k + 1] - xs_[k]);
  }
  for (std::size_t k = 0; k + 1 < ys_.size(); ++k) {
    hy_max = std::max(hy_max, ys_[k + 1] - ys_[k]);
  }
  // Each measure is monotone in hx and hy, so the maximizing cell pairs the
  // widest column with the tallest row.
  switch (measure) {
    case SizeMeasure::MaxEdge: return std::max(hx_max, hy_max);
    case SizeMeasure::MeanEdge: return 0.5 * (hx_max + hy_max);
    case SizeMeasure::MaxDiameter: return std::hypot(hx_max, hy_max);
    case SizeMeasure::InverseN: return 1.0 / nx();
  }
  return 0.0;
}

Mesh build_uniform(int n, int m, const Domain& domain) {
  if (n < 1 || m < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "build_uniform: cell counts must be >= 1");
  }
  if (!(domain.x_max > domain.x_min) || !(domain.y_max > domain.y_min)) {
    throw Error(ErrorCode::InvalidArgument, "build_uniform: degenerate domain");
  }
  return Mesh(equispaced(n, domain.x_min, domain.x_max),
              equispaced(m, domain.y_min, domain.y_max));
}

Mesh build_graded_half(int n1x, int n1y, const Domain& domain) {
  if (domain != kUnitSquare) {
    throw Error(ErrorCode::UnsupportedDomain,
                "build_graded_half: only the unit square is supported");
  }
  if (n1x < 1 || n1y < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "build_graded_half: cell counts must be >= 1");
  }
  return Mesh(graded_axis(n1x), graded_axis(n1y));
}

Mesh build_perturbed(int n, double amplitude, std::uint64_t seed) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidArgument, "build_perturbed: n must be >= 2");
  }
  if (!(amplitude >= 0.0 && amplitude < 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "build_perturbed: amplitude must lie in [0, 1)");
  }
  const double h = 1.0 / n;
  SplitMix64 rng(seed);
  auto perturb = [&](std::vector<double>& v) {
    for (int k = 1; k < n; ++k) v[k] += amplitude * (rng.uniform01() - 0.5) * h;
  };
  std::vector<double> xs = equispaced(n, 0.0, 1.0);
  std::vector<double> ys = equispaced(n, 0.0, 1.0);
  perturb(xs);
  perturb(ys);
  return Mesh(std::move(xs), std::move(ys));
}

Mesh refine_bisect(const Mesh& mesh) {
  return Mesh(bisect_axis(mesh.xs()), bisect_axis(mesh.ys()));
}

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace wgrect
