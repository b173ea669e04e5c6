#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "wgrect/cases.hpp"
#include "wgrect/mesh.hpp"

namespace wgrect {

inline constexpr int kNumErrorColumns = 5;
inline constexpr std::array<const char*, kNumErrorColumns> kErrorColumns{
    "e_inf_star", "e_l2", "e_h1_weak", "e_h1_star", "e_h1_proj"};

struct ErrorReport {
  double h_label = 0.0;
  int n_dofs = 0;
  double e_inf_star = 0.0;  // max over cells |u(x_c) - S(u_b)(x_c)|
  double e_l2 = 0.0;        // ||u - S(u_b)||
  double e_h1_weak = 0.0;   // ||grad_d (Q_b u - u_b)||
  double e_h1_star = 0.0;   // (sum |grad_d u_b - grad u(x_c)|^2 |T|)^(1/2)
  double e_h1_proj = 0.0;   // ||grad (Q_0 u - S(u_b))||
  int cg_iters = 0;

  /// Columns in kErrorColumns order.
  double column(int k) const;
};

/// All five error columns for an edge-indexed solution u_b (boundary
/// entries included). h_label is mesh.size(label); n_dofs and cg_iters are
/// left for the caller.
ErrorReport error_report(const Mesh& mesh, const ProblemCase& pc,
                         const std::vector<double>& u_b, SizeMeasure label,
                         int quad_order = 5);

/// ||Q_h grad u - grad_d u_b|| with Q_h the cell average; equals e_h1_weak
/// because grad_d Q_b = Q_h grad.
double h1_weak_via_cell_average(const Mesh& mesh, const ProblemCase& pc,
                                const std::vector<double>& u_b,
                                int quad_order = 5);

using RateRow = std::array<std::optional<double>, kNumErrorColumns>;

/// log2(coarse / fine) per column; empty where either error is zero.
RateRow pair_rate(const ErrorReport& coarse, const ErrorReport& fine);

struct RateSummary {
  std::vector<RateRow> pairwise;  // one per adjacent pair
  RateRow last;                   // last pair, rounded to 2 decimals
  RateRow fit;                    // least-squares slope of log e against log h
};

/// Throws Error(InvalidArgument) for fewer than two reports.
RateSummary rates(std::span<const ErrorReport> reports);

}  // namespace wgrect
