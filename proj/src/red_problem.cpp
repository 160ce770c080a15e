#include "redsolve/red_problem.hpp"

#include <stdexcept>

namespace redsolve {

RedProblem::RedProblem(LinearOperatorPtr H_, Image y_, double sigma_, double alpha_,
                       DenoiserPtr f_)
    : H(std::move(H_)), y(std::move(y_)), sigma(sigma_), alpha(alpha_), f(std::move(f_)) {
  if (!H) throw std::invalid_argument("RedProblem: null operator");
  if (!f) throw std::invalid_argument("RedProblem: null denoiser");
  if (!(sigma > 0.0)) throw std::invalid_argument("RedProblem: sigma must be positive");
  if (!(alpha > 0.0)) throw std::invalid_argument("RedProblem: alpha must be positive");
  if (!(y.dims() == H->output_dims()))
    throw std::invalid_argument("RedProblem: y dims do not match operator output dims");
}

RedEvaluation evaluate_at(const RedProblem& p, const Image& x) {
  if (!(x.dims() == p.H->input_dims()))
    throw std::invalid_argument("evaluate_at: x dims do not match operator input dims");

  Image denoised = p.f->denoise(x);

  const Image residual = p.H->apply(x) - p.y;
  const double data_term = dot(residual, residual) / (2.0 * p.sigma * p.sigma);

  Image diff = x - denoised;
  const double prior = 0.5 * dot(x, diff);
  diff *= p.alpha;

  return RedEvaluation{data_term + p.alpha * prior, prior, data_term,
                       std::move(denoised), std::move(diff)};
}

double prior_value(const RedProblem& p, const Image& x) {
  if (!(x.dims() == p.H->input_dims()))
    throw std::invalid_argument("prior_value: dimension mismatch");
  const Image denoised = p.f->denoise(x);
  return 0.5 * dot(x, x - denoised);
}

double objective(const RedProblem& p, const Image& x) {
  return evaluate_at(p, x).objective;
}

Image gradient(const RedProblem& p, const Image& x) {
  const RedEvaluation ev = evaluate_at(p, x);
  return data_gradient(p, x) + ev.prior_gradient;
}

Image prior_gradient(const RedProblem& p, const Image& x) {
  return evaluate_at(p, x).prior_gradient;
}

std::pair<double, Image> value_and_gradient(const RedProblem& p, const Image& x) {
  const RedEvaluation ev = evaluate_at(p, x);
  return {ev.objective, data_gradient(p, x) + ev.prior_gradient};
}

Image data_gradient(const RedProblem& p, const Image& x) {
  Image out = p.H->adjoint_apply(p.H->apply(x) - p.y);
  out *= 1.0 / (p.sigma * p.sigma);
  return out;
}

} // namespace redsolve
