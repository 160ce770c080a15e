#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>

#include "redsolve/image.hpp"
#include "redsolve/kernel.hpp"

namespace redsolve {

// Abstract denoiser f(.) with a mandatory evaluation counter. Every call to
// denoise() increments the counter by exactly one; the counter is the cost
// unit for all solver benchmarks.
class Denoiser {
public:
  virtual ~Denoiser() = default;

  Image denoise(const Image& x) const;

  std::int64_t eval_count() const { return evals_.load(); }

  std::optional<double> noise_level_hint() const { return hint_; }
  void set_noise_level_hint(double h) { hint_ = h; }

protected:
  virtual Image do_denoise(const Image& x) const = 0;

private:
  mutable std::atomic<std::int64_t> evals_{0};
  std::optional<double> hint_;
};

using DenoiserPtr = std::shared_ptr<Denoiser>;

// Circular convolution with a normalized kernel: linear, symmetric when the
// kernel is, and with Jacobian spectral radius <= 1 by construction.
class LinearFilterDenoiser : public Denoiser {
public:
  explicit LinearFilterDenoiser(Kernel k) : kernel_(std::move(k)) {}
  const Kernel& kernel() const { return kernel_; }

protected:
  Image do_denoise(const Image& x) const override { return convolve_circular(x, kernel_); }

private:
  Kernel kernel_;
};

class GaussianFilterDenoiser final : public LinearFilterDenoiser {
public:
  GaussianFilterDenoiser(int size, double std)
      : LinearFilterDenoiser(gaussian_kernel(size, std)) {}
};

class BoxFilterDenoiser final : public LinearFilterDenoiser {
public:
  explicit BoxFilterDenoiser(int size) : LinearFilterDenoiser(uniform_kernel(size)) {}
};

// f(x) = factor * x
class ScalingDenoiser final : public Denoiser {
public:
  explicit ScalingDenoiser(double factor) : factor_(factor) {}

protected:
  Image do_denoise(const Image& x) const override { return factor_ * x; }

private:
  double factor_;
};

// ||f(c x) - c f(x)|| / (||f(x)|| + eps); zero for locally homogeneous f.
// Costs 2 denoiser evaluations.
double homogeneity_residual(const Denoiser& d, const Image& x, double c);

// Power iteration on the central-difference Jacobian action
// v -> (f(x + h v) - f(x - h v)) / (2 h), seeded deterministically.
// Returns the final Rayleigh-quotient magnitude; costs 2*probes evaluations.
double jacobian_spectral_radius_estimate(const Denoiser& d, const Image& x,
                                         int probes, double fd_step);

// 1e-3 * (1 + ||x||_inf): balances truncation and round-off at intensity scale.
double default_fd_step(const Image& x);

} // namespace redsolve
