#pragma once

#include <optional>

#include "redsolve/image.hpp"

namespace redsolve {

// SPD proximal weighting B = tau*I + u u^T, kept as a matrix-vector
// operator. An absent u means u = 0.
struct Weighting {
  double tau = 0.0;
  std::optional<Image> u;

  Image apply(const Image& v) const;
};

enum class Sr1Branch {
  initial,        // k = 1: no history yet, B = alpha*I
  fallback,       // non-positive curvature (or degenerate): B = alpha*I
  skip_rank_one,  // secant violation below delta: B = tau*I
  rank_one,       // B = tau*I + u u^T with B s = m exactly
};

struct Sr1Result {
  Weighting B;
  Sr1Branch branch;
};

// Scaled-identity-plus-rank-one secant approximation to the Hessian of the
// prior term, built afresh each iteration from the latest step and gradient
// difference. H0 = tau*I with tau = <s,m>/(gamma*||s||^2); damping by
// gamma > 1 keeps tau strictly below the curvature along s, so the
// rank-one factor u = (m - H0 s)/sqrt(<m - H0 s, s>) is real and
// B s = m holds exactly. Non-positive curvature falls back to alpha*I.
// Costs zero denoiser evaluations (gradients are inputs).
Sr1Result sr1_weighting(int k, const Image& x_k, const Image& x_km1,
                        const Image& grad_g_k, const Image& grad_g_km1,
                        double alpha, double gamma, double delta);

} // namespace redsolve
