#pragma once

#include <vector>

#include "redsolve/image.hpp"

namespace redsolve {

// Square convolution kernel with odd side length, normalized to sum 1.
class Kernel {
public:
  Kernel(int size, std::vector<double> taps);

  int size() const { return size_; }
  double tap(int i, int j) const { return taps_[static_cast<std::size_t>(j) * size_ + i]; }
  const std::vector<double>& taps() const { return taps_; }

  // 180-degree rotation; the adjoint of convolution is convolution with this.
  Kernel rotated() const;

private:
  int size_;
  std::vector<double> taps_;
};

Kernel gaussian_kernel(int size, double std);
Kernel uniform_kernel(int size);

// Circular (periodic-boundary) 2D convolution.
Image convolve_circular(const Image& x, const Kernel& k);

} // namespace redsolve
