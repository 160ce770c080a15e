#pragma once

#include <complex>
#include <vector>

namespace redsolve::fft {

using cvec = std::vector<std::complex<double>>;

// In-place 2D DFT, row-major layout [y*width + x]. forward2d is
// unnormalized; inverse2d applies the 1/(width*height) factor.
// Backed by FFTW; any size is supported. Thread-safe.
void forward2d(int width, int height, cvec& values);
void inverse2d(int width, int height, cvec& values);

} // namespace redsolve::fft
