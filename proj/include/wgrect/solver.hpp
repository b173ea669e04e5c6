#pragma once

#include <vector>

#include "wgrect/sparse.hpp"

namespace wgrect {

struct CgResult {
  std::vector<double> x;
  int iterations = 0;
  double residual = 0.0;  // final ||b - A x|| / ||b|| (recursive estimate)
  bool converged = false;
};

/// Jacobi-preconditioned conjugate gradients from x = 0. Stops when the
/// relative residual drops to tol. max_iter < 0 means 10 * n.
/// Inner products use pairwise_dot, so results are reproducible.
/// Throws Error(InvalidArgument) on size mismatch or tol <= 0.
CgResult cg_solve(const CsrMatrix& a, const std::vector<double>& b,
                  double tol = 1e-12, int max_iter = -1);

/// cg_solve followed by iterative refinement: the residual b - A x is formed
/// in long double and the correction solved by cg_solve at max(tol, 1e-6).
/// One pass already brings x to within a few ulps of the exact solution;
/// further passes stop early once adding the correction leaves x unchanged.
/// iterations counts CG steps over all passes; residual is the final true
/// relative residual.
CgResult refined_solve(const CsrMatrix& a, const std::vector<double>& b,
                       double tol = 1e-12, int max_refinements = 1);

/// Cholesky solve of a dense row-major n x n SPD matrix.
/// Throws Error(SolverFailure) on a non-positive pivot and
/// Error(InvalidArgument) for n > 4096 or a size mismatch.
std::vector<double> dense_solve(std::vector<double> a, int n,
                                const std::vector<double>& b);

}  // namespace wgrect
