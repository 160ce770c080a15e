#pragma once

#include <cstdint>

#include "redsolve/image.hpp"

namespace redsolve {

// Adds i.i.d. Normal(0, sigma^2) to every pixel. The seed fully determines
// the output: sampling is Box-Muller over mt19937_64, so results do not
// depend on the standard library's normal_distribution implementation.
Image add_gaussian_noise(const Image& x, double sigma, std::uint64_t seed);

} // namespace redsolve
