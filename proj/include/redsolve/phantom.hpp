#pragma once

#include "redsolve/image.hpp"

namespace redsolve {

// Deterministic synthetic test scene: smooth background, soft and sharp
// structures, and an oscillatory texture band. Intensities in [0,255].
// Stands in for the classic grayscale test images, which are not shipped.
Image make_phantom(int width, int height);

} // namespace redsolve
