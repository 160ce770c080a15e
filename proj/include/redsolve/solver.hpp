#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "redsolve/image.hpp"
#include "redsolve/red_problem.hpp"
#include "redsolve/weighting.hpp"

namespace redsolve {

struct SolverConfig {
  int max_outer_iters = 1000;
  std::int64_t max_denoiser_evals = 200;
  double step_size_init = 1.0;    // a_k
  double safeguard_epsilon = 1e-2;
  double cg_tol = 1e-6;           // relative residual
  int cg_max_iters = 50;
  double gamma = 1.25;
  double delta = 1e-8;
  double outer_tol = 0.0;         // relative step-norm stop; 0 disables
};

enum class SolverStatus { converged, budget_exhausted, max_iters };

struct TraceRecord {
  int iteration;
  std::int64_t denoiser_evals;    // cumulative, counted from run start
  double objective;
  std::optional<double> psnr;     // vs. the reference, when one is given
  double elapsed_seconds;
};

// Per-iteration record of every run; backs all benchmarks. The objective
// column holds the value computed by that iteration's denoiser evaluation
// (for fp/apg that is the step's input point, for wpm the accepted
// iterate); psnr is always of the iterate the iteration produced.
struct SolverTrace {
  std::vector<TraceRecord> records;
  SolverStatus status = SolverStatus::max_iters;
  int step_halvings = 0;
  int sr1_fallbacks = 0;
};

struct SolveResult {
  Image x;
  SolverTrace trace;
};

using IterationCallback = std::function<void(int iteration, const Image& iterate)>;

// Override for the proximal weighting (testing and experiments); when unset,
// run_wpm uses the secant approximation from sr1_weighting.
using WeightingProvider =
    std::function<Weighting(int k, const RedProblem& p, const Image& x_k)>;

// Momentum recurrence t_{k+1} = (1 + sqrt(1 + 4 t_k^2)) / 2.
double apg_t_next(double t);

// One lagged-denoiser step: solves
//   (1/sigma^2) H^T(H x+ - y) + alpha (x+ - f(x_in)) = 0
// exactly in the Fourier domain when H is circulant, otherwise by CG.
// Costs exactly 1 denoiser evaluation.
Image fp_step(const RedProblem& p, const Image& x_in, const SolverConfig& cfg);

// One weighted proximal step: solves
//   (a_k/sigma^2 H^T H + B) x+ = a_k/sigma^2 H^T y + B x_k - a_k grad_g(x_k)
// by CG, warm-started at x_k. Costs exactly 1 denoiser evaluation.
Image wpm_step(const RedProblem& p, const Image& x_k, const Weighting& B, double a_k,
               const SolverConfig& cfg);

// Fixed-point iteration; 1 denoiser evaluation per outer iteration
// (the step's call is fused with objective logging).
SolveResult run_fp(const RedProblem& p, const Image& x0, const SolverConfig& cfg,
                   const Image* reference = nullptr,
                   const IterationCallback& on_iterate = {});

// Accelerated proximal gradient: fp steps from the extrapolated point z_k
// with t_{k+1} = (1+sqrt(1+4 t_k^2))/2 momentum. 1 evaluation per iteration.
SolveResult run_apg(const RedProblem& p, const Image& x0, const SolverConfig& cfg,
                    const Image* reference = nullptr,
                    const IterationCallback& on_iterate = {});

// Weighted proximal method with the SR1 secant weighting and the
// relative-growth step-size safeguard (halve a_k when
// E(x_{k+1}) - E(x_k) > epsilon * E(x_{k+1}); a halved step stays halved).
// Costs 2 evaluations per accepted iteration (step + fused
// objective/gradient at the new iterate), +1 per safeguard retake.
SolveResult run_wpm(const RedProblem& p, const Image& x0, const SolverConfig& cfg,
                    const Image* reference = nullptr,
                    const WeightingProvider& weighting = {},
                    const IterationCallback& on_iterate = {});

} // namespace redsolve
