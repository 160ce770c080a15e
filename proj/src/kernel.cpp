#include "redsolve/kernel.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace redsolve {

namespace {

inline int wrap(int v, int n) {
  v %= n;
  return v < 0 ? v + n : v;
}

} // namespace

Kernel::Kernel(int size, std::vector<double> taps)
    : size_(size), taps_(std::move(taps)) {
  if (size < 1 || size % 2 == 0)
    throw std::invalid_argument("Kernel: size must be an odd positive integer");
  if (taps_.size() != static_cast<std::size_t>(size) * size)
    throw std::invalid_argument("Kernel: tap count does not match size*size");
  const double sum = std::accumulate(taps_.begin(), taps_.end(), 0.0);
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("Kernel: taps must sum to 1");
}

Kernel Kernel::rotated() const {
  std::vector<double> r(taps_.size());
  for (int j = 0; j < size_; ++j)
    for (int i = 0; i < size_; ++i)
      r[static_cast<std::size_t>(size_ - 1 - j) * size_ + (size_ - 1 - i)] =
          taps_[static_cast<std::size_t>(j) * size_ + i];
  return Kernel(size_, std::move(r));
}

Kernel gaussian_kernel(int size, double std) {
  if (size < 1 || size % 2 == 0)
    throw std::invalid_argument("gaussian_kernel: size must be odd");
  if (!(std > 0.0))
    throw std::invalid_argument("gaussian_kernel: std must be positive");
  const int c = size / 2;
  std::vector<double> taps(static_cast<std::size_t>(size) * size);
  double sum = 0.0;
  for (int j = 0; j < size; ++j) {
    for (int i = 0; i < size; ++i) {
      const double dx = i - c, dy = j - c;
      const double v = std::exp(-(dx * dx + dy * dy) / (2.0 * std * std));
      taps[static_cast<std::size_t>(j) * size + i] = v;
      sum += v;
    }
  }
  for (double& t : taps) t /= sum;
  return Kernel(size, std::move(taps));
}

Kernel uniform_kernel(int size) {
  if (size < 1 || size % 2 == 0)
    throw std::invalid_argument("uniform_kernel: size must be odd");
  const double v = 1.0 / (static_cast<double>(size) * size);
  return Kernel(size, std::vector<double>(static_cast<std::size_t>(size) * size, v));
}

Image convolve_circular(const Image& x, const Kernel& k) {
  const int w = x.width(), h = x.height(), n = k.size(), c = n / 2;
  if (n > w || n > h)
    throw std::invalid_argument("convolve_circular: kernel larger than image");
  Image out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int px = 0; px < w; ++px) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) {
        const int sy = wrap(y - (j - c), h);
        for (int i = 0; i < n; ++i) {
          const int sx = wrap(px - (i - c), w);
          acc += k.tap(i, j) * x.at(sx, sy);
        }
      }
      out.at(px, y) = acc;
    }
  }
  return out;
}

} // namespace redsolve
