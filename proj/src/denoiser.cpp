#include "redsolve/denoiser.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace redsolve {

Image Denoiser::denoise(const Image& x) const {
  Image out = do_denoise(x);
  if (!(out.dims() == x.dims()))
    throw std::runtime_error("Denoiser: plugin returned mismatched dimensions");
  if (!out.all_finite())
    throw std::runtime_error("Denoiser: plugin returned non-finite values");
  evals_.fetch_add(1, std::memory_order_relaxed);
  return out;
}

double homogeneity_residual(const Denoiser& d, const Image& x, double c) {
  if (c == 0.0 || c < 0.99 || c > 1.01)
    throw std::invalid_argument("homogeneity_residual: c must be in [0.99, 1.01] and nonzero");
  const Image fx = d.denoise(x);
  const Image fcx = d.denoise(c * x);
  const Image diff = fcx - c * fx;
  return norm(diff) / (norm(fx) + std::numeric_limits<double>::epsilon());
}

double jacobian_spectral_radius_estimate(const Denoiser& d, const Image& x,
                                         int probes, double fd_step) {
  if (probes < 1)
    throw std::invalid_argument("jacobian_spectral_radius_estimate: probes must be >= 1");
  if (!(fd_step > 0.0))
    throw std::invalid_argument("jacobian_spectral_radius_estimate: fd_step must be positive");

  std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (static_cast<std::uint64_t>(x.width()) << 32) ^
                      static_cast<std::uint64_t>(x.height()));
  Image v(x.width(), x.height());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = ((rng() >> 11) * 0x1.0p-53) - 0.5;
  const double n0 = norm(v);
  if (n0 == 0.0) throw std::runtime_error("jacobian_spectral_radius_estimate: degenerate start");
  v *= 1.0 / n0;

  double rayleigh = 0.0;
  for (int p = 0; p < probes; ++p) {
    const Image fp = d.denoise(axpy(x, fd_step, v));
    const Image fm = d.denoise(axpy(x, -fd_step, v));
    Image w = fp - fm;
    w *= 1.0 / (2.0 * fd_step);
    rayleigh = dot(v, w); // v is unit
    const double wn = norm(w);
    if (wn == 0.0) return 0.0;
    w *= 1.0 / wn;
    v = std::move(w);
  }
  return std::fabs(rayleigh);
}

double default_fd_step(const Image& x) { return 1e-3 * (1.0 + max_abs(x)); }

} // namespace redsolve
