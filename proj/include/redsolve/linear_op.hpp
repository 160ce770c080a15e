#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "redsolve/image.hpp"
#include "redsolve/kernel.hpp"

namespace redsolve {

// Matrix-free linear forward model with an exact adjoint. Operators are
// immutable after construction and safe for concurrent application.
class LinearOperator {
public:
  virtual ~LinearOperator() = default;

  Dims input_dims() const { return input_; }
  Dims output_dims() const { return output_; }

  Image apply(const Image& x) const;
  Image adjoint_apply(const Image& y) const;

  // DFT multipliers over input_dims when the operator is block-circulant
  // (periodic convolution); nullptr otherwise. Layout matches fft::forward2d.
  const std::vector<std::complex<double>>* circulant_symbol() const {
    return symbol_ ? &*symbol_ : nullptr;
  }

  // Fourier diagonal of H^T H over input_dims: exact (|symbol|^2) for
  // circulant operators, the aliasing-averaged diagonal for decimated
  // compositions. A preconditioning surrogate only; absent when nothing
  // useful exists.
  virtual std::optional<std::vector<double>> gram_symbol() const;

protected:
  LinearOperator(Dims input, Dims output) : input_(input), output_(output) {}

  virtual Image do_apply(const Image& x) const = 0;
  virtual Image do_adjoint(const Image& y) const = 0;

  std::optional<std::vector<std::complex<double>>> symbol_;

private:
  Dims input_;
  Dims output_;
};

using LinearOperatorPtr = std::shared_ptr<const LinearOperator>;

// Circular 2D convolution with k; the adjoint is convolution with the
// 180-degree-rotated kernel. Carries the circulant symbol.
LinearOperatorPtr make_blur(const Kernel& k, Dims dims);

// Keeps every factor-th pixel starting at `offset` in each axis; the
// adjoint zero-fills the discarded positions.
LinearOperatorPtr make_decimation(int factor, Dims hi_dims, int offset = 0);

// outer after inner. The symbol is present only if both factors are
// circulant on the same grid (then it is the product of symbols).
LinearOperatorPtr compose(LinearOperatorPtr outer, LinearOperatorPtr inner);

LinearOperatorPtr make_identity(Dims dims);

// scale * H^T(H x) + extra_diagonal * x
Image gram_apply(const LinearOperator& H, double extra_diagonal, double scale,
                 const Image& x);

// Fourier application through the symbol (tests and the exact FP path).
Image apply_symbol(const std::vector<std::complex<double>>& symbol, Dims dims,
                   const Image& x);

} // namespace redsolve
