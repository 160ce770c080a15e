#include "redsolve/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace redsolve {

namespace {

// deterministic per-pixel grain in [-1, 1]
double hash_noise(int x, int y) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  h ^= static_cast<std::uint64_t>(x) * 0xff51afd7ed558ccdull;
  h ^= static_cast<std::uint64_t>(y) * 0xc4ceb9fe1a85ec53ull;
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return 2.0 * ((h >> 11) * 0x1.0p-53) - 1.0;
}

struct Band {
  double freq;  // cycles per pixel
  double angle; // radians
  double amp;
  double phase;
};

// oriented sinusoids: dominant coarse weave at 8-10 px periods plus a
// lighter sprinkle of finer detail
constexpr Band kBands[] = {
    {0.045, 0.00, 10.0, 0.7}, {0.065, 1.10, 10.0, 2.1}, {0.085, 0.52, 12.0, 4.0},
    {0.100, 0.00, 32.0, 1.3}, {0.108, 1.57, 38.0, 5.1}, {0.118, 0.79, 34.0, 0.2},
    {0.125, 0.26, 28.0, 3.3}, {0.170, 1.05, 6.0, 5.9},  {0.220, 0.00, 3.0, 2.6},
    {0.280, 1.45, 2.5, 1.9},  {0.330, 0.63, 2.0, 4.4},
};

} // namespace

Image make_phantom(int width, int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("make_phantom: dimensions must be positive");
  constexpr double pi = std::numbers::pi;
  Image img(width, height);
  for (int y = 0; y < height; ++y) {
    const double v = (y + 0.5) / height;
    for (int x = 0; x < width; ++x) {
      const double u = (x + 0.5) / width;

      double val = 95.0 + 45.0 * v + 22.0 * std::sin(2.0 * pi * u);

      // soft blob
      {
        const double du = u - 0.30, dv = v - 0.32;
        val += 70.0 * std::exp(-(du * du + dv * dv) / (2.0 * 0.012));
      }
      // bright rectangle with hard edges
      if (u > 0.55 && u < 0.82 && v > 0.15 && v < 0.38) val = 190.0;
      // dark disk
      {
        const double du = u - 0.70, dv = v - 0.68;
        if (du * du + dv * dv < 0.013) val = 55.0;
      }
      // diagonal edge in the lower-left corner
      if (u + (1.0 - v) < 0.30) val = 150.0;
      // thin bright vertical bar
      if (std::fabs(u - 0.90) * width < 1.5 && v > 0.45 && v < 0.95) val = 205.0;

      // dense oriented texture over the whole frame (pixel-scale
      // frequencies, so structure survives any crop or resize)
      double texture = 0.0;
      for (const Band& b : kBands) {
        const double cx = std::cos(b.angle), sy = std::sin(b.angle);
        texture += b.amp * std::sin(2.0 * pi * b.freq * (cx * x + sy * y) + b.phase);
      }
      // modulate so texture strength varies across the image
      texture *= 0.55 + 0.45 * std::sin(2.0 * pi * (0.9 * u + 0.6 * v));
      val += texture;
      val += 1.5 * hash_noise(x, y);

      img.at(x, y) = std::clamp(val, 2.0, 253.0);
    }
  }
  return img;
}

} // namespace redsolve
