#pragma once

#include <functional>

#include "redsolve/image.hpp"

namespace redsolve {

using LinearMap = std::function<Image(const Image&)>;

struct CgResult {
  Image x;
  int iterations = 0;
  double relative_residual = 0.0; // ||b - A x|| / ||b||
};

// Conjugate gradients for SPD A given as a matrix-vector procedure.
// Stops when ||b - A x|| <= tol * ||b|| (the true residual, also with a
// preconditioner) or after max_iters. An optional SPD preconditioner
// z = M^{-1} r turns this into standard PCG. Throws if non-finite values
// appear (indefinite or broken A).
CgResult cg_solve(const LinearMap& A, const Image& b, const Image& x0, double tol,
                  int max_iters, const LinearMap& precondition = {});

} // namespace redsolve
