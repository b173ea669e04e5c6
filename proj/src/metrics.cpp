#include "wgrect/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "wgrect/assembly.hpp"
#include "wgrect/error.hpp"
#include "wgrect/local.hpp"
#include "wgrect/projections.hpp"

namespace wgrect {

namespace {

double sq(double v) { return v * v; }
double sq(Vec2 v) { return v.x * v.x + v.y * v.y; }

std::vector<double> edge_averages(const Mesh& mesh, const ScalarField& u,
                                  const GaussRule& rule) {
  std::vector<double> q(mesh.num_edges());
  for (int id = 0; id < mesh.num_edges(); ++id) {
    q[id] = q_b(u, mesh.edge_geometry(id), rule);
  }
  return q;
}

}  // namespace

double ErrorReport::column(int k) const {
  switch (k) {
    case 0: return e_inf_star;
    case 1: return e_l2;
    case 2: return e_h1_weak;
    case 3: return e_h1_star;
    case 4: return e_h1_proj;
    default: throw Error(ErrorCode::InvalidArgument, "ErrorReport::column: bad index");
  }
}

ErrorReport error_report(const Mesh& mesh, const ProblemCase& pc,
                         const std::vector<double>& u_b, SizeMeasure label,
                         int quad_order) {
  if (static_cast<int>(u_b.size()) != mesh.num_edges()) {
    throw Error(ErrorCode::InvalidArgument, "error_report: u_b must be edge-indexed");
  }
  const GaussRule rule = gauss_legendre(quad_order);
  const std::vector<double> qbu = edge_averages(mesh, pc.u, rule);

  ErrorReport rep;
  rep.h_label = mesh.size(label);
  double l2 = 0.0, weak = 0.0, star = 0.0, proj = 0.0;
  for (int j = 0; j < mesh.ny(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const CellGeom cell = mesh.cell(i, j);
      const double area = cell.area();
      const EdgeValues v = cell_values(cell, u_b);
      const ExtensionCoeffs s = extension(cell, v);
      const Vec2 xc = cell.center;

      rep.e_inf_star = std::max(rep.e_inf_star, std::abs(pc.u(xc.x, xc.y) - s.c1));

      l2 += integrate_rect(rule, cell.x0, cell.x1, cell.y0, cell.y1,
                           [&](double x, double y) {
                             return sq(pc.u(x, y) - s(cell, {x, y}));
                           });

      EdgeValues e{};
      for (int k = 0; k < 4; ++k) e[k] = qbu[cell.edges[k]] - v[k];
      weak += sq(weak_gradient(cell, e)) * area;

      const Vec2 g = pc.grad_u(xc.x, xc.y);
      star += sq(Vec2{s.c2 - g.x, s.c3 - g.y}) * area;

      const P1Coeffs q0 = q_0(pc.u, cell, rule);
      proj += sq(Vec2{q0.a1 - s.c2, q0.a2 - s.c3}) * area;
    }
  }
  rep.e_l2 = std::sqrt(l2);
  rep.e_h1_weak = std::sqrt(weak);
  rep.e_h1_star = std::sqrt(star);
  rep.e_h1_proj = std::sqrt(proj);
  return rep;
}

double h1_weak_via_cell_average(const Mesh& mesh, const ProblemCase& pc,
                                const std::vector<double>& u_b, int quad_order) {
  const GaussRule rule = gauss_legendre(quad_order);
  double sum = 0.0;
  for (int j = 0; j < mesh.ny(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const CellGeom cell = mesh.cell(i, j);
      const Vec2 qh = q_h_grad(pc.grad_u, cell, rule);
      const Vec2 gd = weak_gradient(cell, cell_values(cell, u_b));
      sum += sq(Vec2{qh.x - gd.x, qh.y - gd.y}) * cell.area();
    }
  }
  return std::sqrt(sum);
}

RateRow pair_rate(const ErrorReport& coarse, const ErrorReport& fine) {
  RateRow r;
  for (int k = 0; k < kNumErrorColumns; ++k) {
    const double ec = coarse.column(k);
    const double ef = fine.column(k);
    if (ec > 0.0 && ef > 0.0) r[k] = std::log2(ec / ef);
  }
  return r;
}

RateSummary rates(std::span<const ErrorReport> reports) {
  if (reports.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "rates: need at least two levels");
  }
  RateSummary out;
  for (std::size_t l = 0; l + 1 < reports.size(); ++l) {
    out.pairwise.push_back(pair_rate(reports[l], reports[l + 1]));
  }
  for (int k = 0; k < kNumErrorColumns; ++k) {
    if (const auto& r = out.pairwise.back()[k]) {
      out.last[k] = std::round(*r * 100.0) / 100.0;
    }
    bool ok = true;
    double mx = 0.0, my = 0.0;
    for (const ErrorReport& rep : reports) {
      ok = ok && rep.column(k) > 0.0 && rep.h_label > 0.0;
      if (!ok) break;
      mx += std::log2(rep.h_label);
      my += std::log2(rep.column(k));
    }
    if (!ok) continue;
    mx /= static_cast<double>(reports.size());
    my /= static_cast<double>(reports.size());
    double sxy = 0.0, sxx = 0.0;
    for (const ErrorReport& rep : reports) {
      const double dx = std::log2(rep.h_label) - mx;
      sxy += dx * (std::log2(rep.column(k)) - my);
      sxx += dx * dx;
    }
    if (sxx > 0.0) out.fit[k] = sxy / sxx;
  }
  return out;
}

}  // namespace wgrect
