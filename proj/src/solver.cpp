#include "wgrect/solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "wgrect/error.hpp"

namespace wgrect {

CgResult cg_solve(const CsrMatrix& a, const std::vector<double>& b, double tol,
                  int max_iter) {
  const int n = a.n;
  if (static_cast<int>(b.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "cg_solve: size mismatch");
  }
  if (!(tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "cg_solve: tol must be positive");
  }
  if (max_iter < 0) max_iter = 10 * n;

  CgResult res;
  res.x.assign(n, 0.0);
  const double b_norm = std::sqrt(pairwise_dot(b, b));
  if (n == 0 || b_norm == 0.0) {
    res.converged = true;
    return res;
  }

  std::vector<double> inv_diag = a.diagonal();
  for (double& d : inv_diag) {
    if (!(d > 0.0)) {
      throw Error(ErrorCode::SolverFailure, "cg_solve: non-positive diagonal entry");
    }
    d = 1.0 / d;
  }

  // Three sweeps per iteration: A p with p.Ap, the x/r/z update with r.r and
  // r.z, and the direction update. Sums use the pairwise_dot tree.
  std::vector<double> r = b;
  std::vector<double> z(n), p(n), ap(n);
  for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
  p = z;
  double rz = pairwise_dot(r, z);
  res.residual = 1.0;

  auto spmv_term = [&](std::size_t i) {
    double s = 0.0;
    for (auto k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) s += a.val[k] * p[a.col[k]];
    ap[i] = s;
    return p[i] * s;
  };
  double alpha = 0.0;
  auto update_term = [&](std::size_t i) {
    res.x[i] += alpha * p[i];
    r[i] -= alpha * ap[i];
    z[i] = inv_diag[i] * r[i];
    return std::array<double, 2>{r[i] * r[i], r[i] * z[i]};
  };

  for (int it = 1; it <= max_iter; ++it) {
    const double pap = pairwise_sum<double>(0, n, spmv_term);
    if (!(pap > 0.0)) {
      throw Error(ErrorCode::SolverFailure,
                  "cg_solve: matrix is not positive definite");
    }
    alpha = rz / pap;
    const auto [rr, rz_next] = pairwise_sum<std::array<double, 2>>(0, n, update_term);
    res.iterations = it;
    res.residual = std::sqrt(rr) / b_norm;
    if (res.residual <= tol) {
      res.converged = true;
      return res;
    }
    const double beta = rz_next / rz;
    rz = rz_next;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  return res;
}

namespace {

// b - A x with long double accumulation; returns the residual and its norm.
std::vector<double> accurate_residual(const CsrMatrix& a, const std::vector<double>& b,
                                      const std::vector<double>& x, double& norm) {
  std::vector<double> r(a.n);
  long double sum_sq = 0.0L;
  for (int i = 0; i < a.n; ++i) {
    long double s = b[i];
    for (auto k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      s -= static_cast<long double>(a.val[k]) * x[a.col[k]];
    }
    r[i] = static_cast<double>(s);
    sum_sq += s * s;
  }
  norm = static_cast<double>(std::sqrt(sum_sq));
  return r;
}

}  // namespace

CgResult refined_solve(const CsrMatrix& a, const std::vector<double>& b, double tol,
                       int max_refinements) {
  CgResult res = cg_solve(a, b, tol);
  if (!res.converged || a.n == 0) return res;
  const double b_norm = std::sqrt(pairwise_dot(b, b));
  if (b_norm == 0.0) return res;
  for (int pass = 0; pass < max_refinements; ++pass) {
    double r_norm = 0.0;
    const std::vector<double> r = accurate_residual(a, b, res.x, r_norm);
    res.residual = r_norm / b_norm;
    if (r_norm == 0.0) break;
    // Each pass only needs to gain a few digits; the accurate residual does
    // the rest.
    const CgResult d = cg_solve(a, r, std::max(tol, 1e-6));
    res.iterations += d.iterations;
    if (!d.converged) break;
    bool changed = false;
    for (int i = 0; i < a.n; ++i) {
      const double next = res.x[i] + d.x[i];
      changed = changed || next != res.x[i];
      res.x[i] = next;
    }
    if (!changed) break;
  }
  double r_norm = 0.0;
  accurate_residual(a, b, res.x, r_norm);
  res.residual = r_norm / b_norm;
  return res;
}

std::vector<double> dense_solve(std::vector<double> a, int n,
                                const std::vector<double>& b) {
  if (n < 0 || n > 4096 || a.size() != static_cast<std::size_t>(n) * n ||
      static_cast<int>(b.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "dense_solve: bad dimensions");
  }
  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };
  // Lower-triangular Cholesky factor, stored in place.
  for (int j = 0; j < n; ++j) {
    double d = at(j, j);
    for (int k = 0; k < j; ++k) d -= at(j, k) * at(j, k);
    if (!(d > 0.0)) {
      throw Error(ErrorCode::SolverFailure, "dense_solve: non-positive pivot");
    }
    const double l = std::sqrt(d);
    at(j, j) = l;
    for (int i = j + 1; i < n; ++i) {
      double s = at(i, j);
      for (int k = 0; k < j; ++k) s -= at(i, k) * at(j, k);
      at(i, j) = s / l;
    }
  }
  std::vector<double> x = b;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) x[i] -= at(i, k) * x[k];
    x[i] /= at(i, i);
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int k = i + 1; k < n; ++k) x[i] -= at(k, i) * x[k];
    x[i] /= at(i, i);
  }
  return x;
}

}  // namespace wgrect
