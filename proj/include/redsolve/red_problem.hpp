#pragma once

#include <utility>

#include "redsolve/denoiser.hpp"
#include "redsolve/image.hpp"
#include "redsolve/linear_op.hpp"

namespace redsolve {

// The denoising-regularized recovery problem
//   E(x) = 1/(2 sigma^2) ||H x - y||^2 + alpha/2 <x, x - f(x)>.
struct RedProblem {
  RedProblem(LinearOperatorPtr H, Image y, double sigma, double alpha, DenoiserPtr f);

  LinearOperatorPtr H;
  Image y;
  double sigma;
  double alpha;
  DenoiserPtr f;
};

// Everything one denoiser call at x can yield. Denoiser calls dominate
// cost, so solvers work from this instead of separate value/gradient calls.
struct RedEvaluation {
  double objective;      // E(x)
  double prior;          // <x, x - f(x)> / 2
  double data_term;      // ||H x - y||^2 / (2 sigma^2)
  Image denoised;        // f(x)
  Image prior_gradient;  // alpha * (x - f(x))
};

RedEvaluation evaluate_at(const RedProblem& p, const Image& x); // 1 evaluation

double prior_value(const RedProblem& p, const Image& x);    // 1 evaluation
double objective(const RedProblem& p, const Image& x);      // 1 evaluation
Image gradient(const RedProblem& p, const Image& x);        // 1 evaluation
Image prior_gradient(const RedProblem& p, const Image& x);  // 1 evaluation

// Fused objective and full gradient from a single denoiser call.
std::pair<double, Image> value_and_gradient(const RedProblem& p, const Image& x);

// (1/sigma^2) H^T (H x - y); no denoiser call.
Image data_gradient(const RedProblem& p, const Image& x);

} // namespace redsolve
