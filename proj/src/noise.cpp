#include "redsolve/noise.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace redsolve {

namespace {

inline double uniform01_open(std::mt19937_64& rng) {
  // (0,1]: avoids log(0) in Box-Muller.
  return 1.0 - (rng() >> 11) * 0x1.0p-53;
}

} // namespace

Image add_gaussian_noise(const Image& x, double sigma, std::uint64_t seed) {
  if (sigma < 0.0)
    throw std::invalid_argument("add_gaussian_noise: sigma must be non-negative");
  Image out = x;
  if (sigma == 0.0) return out;

  std::mt19937_64 rng(seed);
  double cached = 0.0;
  bool have_cached = false;
  for (std::size_t i = 0; i < out.size(); ++i) {
    double z;
    if (have_cached) {
      z = cached;
      have_cached = false;
    } else {
      const double u1 = uniform01_open(rng);
      const double u2 = uniform01_open(rng);
      const double r = std::sqrt(-2.0 * std::log(u1));
      const double t = 2.0 * std::numbers::pi * u2;
      z = r * std::cos(t);
      cached = r * std::sin(t);
      have_cached = true;
    }
    out[i] += sigma * z;
  }
  return out;
}

} // namespace redsolve
