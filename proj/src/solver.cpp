#include "redsolve/solver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "redsolve/cg.hpp"
#include "redsolve/fft.hpp"

namespace redsolve {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::optional<double> psnr_vs(const Image* reference, const Image& x) {
  if (!reference) return std::nullopt;
  return psnr(*reference, x);
}

// Fourier-diagonal inverse of scale*H^T H + tau*I built from the operator's
// gram surrogate; exact for circulant H, aliasing-averaged otherwise. The
// rank-one part of a weighting is left to the CG iteration itself.
LinearMap gram_preconditioner(const RedProblem& p, double scale, double tau) {
  auto gram = p.H->gram_symbol();
  if (!gram) return {};
  const Dims dims = p.H->input_dims();
  return [gram = std::move(*gram), dims, scale, tau](const Image& r) {
    fft::cvec buf(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) buf[i] = r[i];
    fft::forward2d(dims.width, dims.height, buf);
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] /= scale * gram[i] + tau;
    fft::inverse2d(dims.width, dims.height, buf);
    Image out(dims.width, dims.height);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i].real();
    return out;
  };
}

// Solves (1/sigma^2 H^T H + alpha I) x = 1/sigma^2 H^T y + alpha*denoised,
// the linear system of one lagged-denoiser step. No denoiser calls.
Image fp_solve_from_denoised(const RedProblem& p, const Image& denoised,
                             const Image& warm, const SolverConfig& cfg) {
  const double inv_s2 = 1.0 / (p.sigma * p.sigma);
  if (const auto* symbol = p.H->circulant_symbol()) {
    const Dims dims = p.H->input_dims();
    fft::cvec yhat(p.y.size());
    for (std::size_t i = 0; i < p.y.size(); ++i) yhat[i] = p.y[i];
    fft::forward2d(dims.width, dims.height, yhat);
    fft::cvec fhat(denoised.size());
    for (std::size_t i = 0; i < denoised.size(); ++i) fhat[i] = denoised[i];
    fft::forward2d(dims.width, dims.height, fhat);
    for (std::size_t i = 0; i < fhat.size(); ++i) {
      const std::complex<double> s = (*symbol)[i];
      const double gain = std::norm(s) * inv_s2 + p.alpha;
      fhat[i] = (std::conj(s) * yhat[i] * inv_s2 + p.alpha * fhat[i]) / gain;
    }
    fft::inverse2d(dims.width, dims.height, fhat);
    Image out(dims.width, dims.height);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = fhat[i].real();
    return out;
  }

  Image b = p.H->adjoint_apply(p.y);
  b *= inv_s2;
  b += p.alpha * denoised;
  const auto A = [&](const Image& v) { return gram_apply(*p.H, p.alpha, inv_s2, v); };
  return cg_solve(A, b, warm, cfg.cg_tol, cfg.cg_max_iters,
                  gram_preconditioner(p, inv_s2, p.alpha)).x;
}

// Right-hand side and CG solve of the weighted proximal system. No
// denoiser calls; prior_grad is alpha*(x_k - f(x_k)) from the caller.
Image wpm_solve_from_denoised(const RedProblem& p, const Image& x_k, const Weighting& B,
                              double a_k, const Image& prior_grad,
                              const SolverConfig& cfg) {
  const double scale = a_k / (p.sigma * p.sigma);
  Image b = p.H->adjoint_apply(p.y);
  b *= scale;
  b += B.apply(x_k);
  b -= a_k * prior_grad;
  const auto A = [&](const Image& v) {
    Image out = gram_apply(*p.H, 0.0, scale, v);
    out += B.apply(v);
    return out;
  };
  return cg_solve(A, b, x_k, cfg.cg_tol, cfg.cg_max_iters,
                  gram_preconditioner(p, scale, B.tau)).x;
}

} // namespace

double apg_t_next(double t) { return (1.0 + std::sqrt(1.0 + 4.0 * t * t)) / 2.0; }

Image fp_step(const RedProblem& p, const Image& x_in, const SolverConfig& cfg) {
  const Image denoised = p.f->denoise(x_in);
  return fp_solve_from_denoised(p, denoised, x_in, cfg);
}

Image wpm_step(const RedProblem& p, const Image& x_k, const Weighting& B, double a_k,
               const SolverConfig& cfg) {
  if (!(a_k > 0.0)) throw std::invalid_argument("wpm_step: a_k must be positive");
  const Image denoised = p.f->denoise(x_k);
  Image prior_grad = x_k - denoised;
  prior_grad *= p.alpha;
  return wpm_solve_from_denoised(p, x_k, B, a_k, prior_grad, cfg);
}

SolveResult run_fp(const RedProblem& p, const Image& x0, const SolverConfig& cfg,
                   const Image* reference, const IterationCallback& on_iterate) {
  const auto start = Clock::now();
  const std::int64_t evals0 = p.f->eval_count();
  Image x = x0;
  SolverTrace trace;
  for (int k = 1;; ++k) {
    if (k > cfg.max_outer_iters) {
      trace.status = SolverStatus::max_iters;
      break;
    }
    if (p.f->eval_count() - evals0 + 1 > cfg.max_denoiser_evals) {
      trace.status = SolverStatus::budget_exhausted;
      break;
    }
    const RedEvaluation ev = evaluate_at(p, x);
    Image x_next = fp_solve_from_denoised(p, ev.denoised, x, cfg);
    trace.records.push_back({k, p.f->eval_count() - evals0, ev.objective,
                             psnr_vs(reference, x_next), seconds_since(start)});
    if (on_iterate) on_iterate(k, x_next);
    const bool converged =
        cfg.outer_tol > 0.0 && norm(x_next - x) <= cfg.outer_tol * norm(x);
    x = std::move(x_next);
    if (converged) {
      trace.status = SolverStatus::converged;
      break;
    }
  }
  return {std::move(x), std::move(trace)};
}

SolveResult run_apg(const RedProblem& p, const Image& x0, const SolverConfig& cfg,
                    const Image* reference, const IterationCallback& on_iterate) {
  const auto start = Clock::now();
  const std::int64_t evals0 = p.f->eval_count();
  Image x = x0;
  Image z = x0;
  double t = 1.0;
  SolverTrace trace;
  for (int k = 1;; ++k) {
    if (k > cfg.max_outer_iters) {
      trace.status = SolverStatus::max_iters;
      break;
    }
    if (p.f->eval_count() - evals0 + 1 > cfg.max_denoiser_evals) {
      trace.status = SolverStatus::budget_exhausted;
      break;
    }
    const RedEvaluation ev = evaluate_at(p, z);
    Image x_next = fp_solve_from_denoised(p, ev.denoised, z, cfg);
    const double t_next = apg_t_next(t);
    z = axpy(x_next, (t - 1.0) / t_next, x_next - x);
    trace.records.push_back({k, p.f->eval_count() - evals0, ev.objective,
                             psnr_vs(reference, x_next), seconds_since(start)});
    if (on_iterate) on_iterate(k, x_next);
    const bool converged =
        cfg.outer_tol > 0.0 && norm(x_next - x) <= cfg.outer_tol * norm(x);
    t = t_next;
    x = std::move(x_next);
    if (converged) {
      trace.status = SolverStatus::converged;
      break;
    }
  }
  return {std::move(x), std::move(trace)};
}

SolveResult run_wpm(const RedProblem& p, const Image& x0, const SolverConfig& cfg,
                    const Image* reference, const WeightingProvider& weighting,
                    const IterationCallback& on_iterate) {
  const auto start = Clock::now();
  const std::int64_t evals0 = p.f->eval_count();
  const auto used = [&] { return p.f->eval_count() - evals0; };

  Image x = x0;
  Image x_prev;
  Image grad_g_prev;
  double a = cfg.step_size_init;
  SolverTrace trace;

  for (int k = 1;; ++k) {
    if (k > cfg.max_outer_iters) {
      trace.status = SolverStatus::max_iters;
      break;
    }
    if (used() + 2 > cfg.max_denoiser_evals) {
      trace.status = SolverStatus::budget_exhausted;
      break;
    }
    const RedEvaluation ev = evaluate_at(p, x); // step evaluation at x_k

    Weighting B;
    if (weighting) {
      B = weighting(k, p, x);
    } else {
      const Sr1Result sr1 = sr1_weighting(k, x, k > 1 ? x_prev : x,
                                          ev.prior_gradient,
                                          k > 1 ? grad_g_prev : ev.prior_gradient,
                                          p.alpha, cfg.gamma, cfg.delta);
      if (sr1.branch == Sr1Branch::fallback) ++trace.sr1_fallbacks;
      B = sr1.B;
    }

    Image x_next;
    RedEvaluation ev_next{};
    int consecutive_halvings = 0;
    bool out_of_budget = false;
    for (;;) {
      x_next = wpm_solve_from_denoised(p, x, B, a, ev.prior_gradient, cfg);
      ev_next = evaluate_at(p, x_next); // safeguard objective, next gradient
      if (ev_next.objective - ev.objective > cfg.safeguard_epsilon * ev_next.objective) {
        a /= 2.0;
        ++trace.step_halvings;
        if (++consecutive_halvings > 30)
          throw std::runtime_error("run_wpm: step size collapsed after 30 halvings");
        if (used() + 1 > cfg.max_denoiser_evals) {
          out_of_budget = true;
          break;
        }
        continue;
      }
      break;
    }
    if (out_of_budget) {
      trace.status = SolverStatus::budget_exhausted;
      break;
    }

    trace.records.push_back({k, used(), ev_next.objective, psnr_vs(reference, x_next),
                             seconds_since(start)});
    if (on_iterate) on_iterate(k, x_next);

    const bool converged =
        cfg.outer_tol > 0.0 && norm(x_next - x) <= cfg.outer_tol * norm(x);
    x_prev = std::move(x);
    grad_g_prev = ev.prior_gradient;
    x = std::move(x_next);
    if (converged) {
      trace.status = SolverStatus::converged;
      break;
    }
  }
  return {std::move(x), std::move(trace)};
}

} // namespace redsolve
