#include "redsolve/cg.hpp"

#include <cmath>
#include <stdexcept>

namespace redsolve {

CgResult cg_solve(const LinearMap& A, const Image& b, const Image& x0, double tol,
                  int max_iters, const LinearMap& precondition) {
  if (!(tol > 0.0)) throw std::invalid_argument("cg_solve: tol must be positive");
  if (max_iters < 0) throw std::invalid_argument("cg_solve: max_iters must be >= 0");
  require_same_dims(b, x0, "cg_solve");

  const double bnorm = norm(b);
  if (bnorm == 0.0) return {Image(b.width(), b.height(), 0.0), 0, 0.0};

  Image x = x0;
  Image r = b - A(x);
  Image z = precondition ? precondition(r) : r;
  Image p = z;
  double rz = dot(r, z);
  double rnorm = norm(r);

  // Always take at least one step: a warm start that merely meets the
  // tolerance would otherwise be returned unimproved.
  int it = 0;
  while (it < max_iters && (it == 0 || rnorm > tol * bnorm)) {
    if (rnorm == 0.0) break;
    const Image Ap = A(p);
    const double pAp = dot(p, Ap);
    if (!std::isfinite(pAp) || pAp <= 0.0)
      throw std::runtime_error("cg_solve: operator is not positive definite");
    const double step = rz / pAp;
    x += step * p;
    r -= step * Ap;
    rnorm = norm(r);
    if (!std::isfinite(rnorm))
      throw std::runtime_error("cg_solve: non-finite residual");
    z = precondition ? precondition(r) : r;
    const double rz_next = dot(r, z);
    p = axpy(z, rz_next / rz, p);
    rz = rz_next;
    ++it;
  }
  return {std::move(x), it, rnorm / bnorm};
}

} // namespace redsolve
