#include "redsolve/linear_op.hpp"

#include <stdexcept>
#include <utility>

#include "redsolve/fft.hpp"

namespace redsolve {

Image LinearOperator::apply(const Image& x) const {
  if (!(x.dims() == input_dims()))
    throw std::invalid_argument("LinearOperator::apply: dimension mismatch");
  return do_apply(x);
}

Image LinearOperator::adjoint_apply(const Image& y) const {
  if (!(y.dims() == output_dims()))
    throw std::invalid_argument("LinearOperator::adjoint_apply: dimension mismatch");
  return do_adjoint(y);
}

std::optional<std::vector<double>> LinearOperator::gram_symbol() const {
  if (!symbol_) return std::nullopt;
  std::vector<double> g(symbol_->size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::norm((*symbol_)[i]);
  return g;
}

namespace {

inline int wrap(int v, int n) {
  v %= n;
  return v < 0 ? v + n : v;
}

class BlurOperator final : public LinearOperator {
public:
  BlurOperator(Kernel k, Dims dims)
      : LinearOperator(dims, dims), kernel_(std::move(k)),
        adjoint_kernel_(kernel_.rotated()) {
    if (kernel_.size() > dims.width || kernel_.size() > dims.height)
      throw std::invalid_argument("make_blur: kernel larger than image");
    // symbol = DFT of the zero-padded, center-shifted kernel
    fft::cvec padded(static_cast<std::size_t>(dims.width) * dims.height, {0.0, 0.0});
    const int c = kernel_.size() / 2;
    for (int j = 0; j < kernel_.size(); ++j)
      for (int i = 0; i < kernel_.size(); ++i) {
        const int x = wrap(i - c, dims.width);
        const int y = wrap(j - c, dims.height);
        padded[static_cast<std::size_t>(y) * dims.width + x] += kernel_.tap(i, j);
      }
    fft::forward2d(dims.width, dims.height, padded);
    symbol_ = std::move(padded);
  }

protected:
  Image do_apply(const Image& x) const override { return convolve_circular(x, kernel_); }
  Image do_adjoint(const Image& y) const override {
    return convolve_circular(y, adjoint_kernel_);
  }

private:
  Kernel kernel_;
  Kernel adjoint_kernel_;
};

class DecimationOperator final : public LinearOperator {
public:
  DecimationOperator(int factor, Dims hi, int offset)
      : LinearOperator(hi, {hi.width / factor, hi.height / factor}),
        factor_(factor), offset_(offset) {}

  // D^T D is a sampling mask; its Fourier diagonal is exactly 1/factor^2.
  std::optional<std::vector<double>> gram_symbol() const override {
    const Dims hi = input_dims();
    return std::vector<double>(static_cast<std::size_t>(hi.width) * hi.height,
                               1.0 / (static_cast<double>(factor_) * factor_));
  }

protected:
  Image do_apply(const Image& x) const override {
    const Dims lo = output_dims();
    Image out(lo.width, lo.height);
    for (int y = 0; y < lo.height; ++y)
      for (int px = 0; px < lo.width; ++px)
        out.at(px, y) = x.at(offset_ + px * factor_, offset_ + y * factor_);
    return out;
  }

  Image do_adjoint(const Image& y) const override {
    const Dims hi = input_dims();
    Image out(hi.width, hi.height, 0.0);
    for (int ly = 0; ly < y.height(); ++ly)
      for (int lx = 0; lx < y.width(); ++lx)
        out.at(offset_ + lx * factor_, offset_ + ly * factor_) = y.at(lx, ly);
    return out;
  }

private:
  int factor_;
  int offset_;
};

class ComposedOperator final : public LinearOperator {
public:
  ComposedOperator(LinearOperatorPtr outer, LinearOperatorPtr inner)
      : LinearOperator(inner->input_dims(), outer->output_dims()),
        outer_(std::move(outer)), inner_(std::move(inner)) {
    const auto* so = outer_->circulant_symbol();
    const auto* si = inner_->circulant_symbol();
    if (so && si && outer_->input_dims() == inner_->input_dims()) {
      std::vector<std::complex<double>> prod(si->size());
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = (*so)[i] * (*si)[i];
      symbol_ = std::move(prod);
    }
  }

  // diag(B^T (O^T O) B) = |S_B|^2 * diag(O^T O) in Fourier when the inner
  // factor is circulant on a square grid
  std::optional<std::vector<double>> gram_symbol() const override {
    if (!(inner_->input_dims() == inner_->output_dims())) return std::nullopt;
    const auto gi = inner_->gram_symbol();
    const auto go = outer_->gram_symbol();
    if (!gi || !go || !inner_->circulant_symbol()) return std::nullopt;
    std::vector<double> g(gi->size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = (*gi)[i] * (*go)[i];
    return g;
  }

protected:
  Image do_apply(const Image& x) const override { return outer_->apply(inner_->apply(x)); }
  Image do_adjoint(const Image& y) const override {
    return inner_->adjoint_apply(outer_->adjoint_apply(y));
  }

private:
  LinearOperatorPtr outer_;
  LinearOperatorPtr inner_;
};

class IdentityOperator final : public LinearOperator {
public:
  explicit IdentityOperator(Dims dims) : LinearOperator(dims, dims) {
    symbol_ = std::vector<std::complex<double>>(
        static_cast<std::size_t>(dims.width) * dims.height, {1.0, 0.0});
  }

protected:
  Image do_apply(const Image& x) const override { return x; }
  Image do_adjoint(const Image& y) const override { return y; }
};

} // namespace

LinearOperatorPtr make_blur(const Kernel& k, Dims dims) {
  return std::make_shared<BlurOperator>(k, dims);
}

LinearOperatorPtr make_decimation(int factor, Dims hi_dims, int offset) {
  if (factor < 1)
    throw std::invalid_argument("make_decimation: factor must be positive");
  if (hi_dims.width % factor != 0 || hi_dims.height % factor != 0)
    throw std::invalid_argument("make_decimation: dimensions not divisible by factor");
  if (offset < 0 || offset >= factor)
    throw std::invalid_argument("make_decimation: offset must be in [0, factor)");
  return std::make_shared<DecimationOperator>(factor, hi_dims, offset);
}

LinearOperatorPtr compose(LinearOperatorPtr outer, LinearOperatorPtr inner) {
  if (!outer || !inner) throw std::invalid_argument("compose: null operator");
  if (!(inner->output_dims() == outer->input_dims()))
    throw std::invalid_argument("compose: inner output dims do not match outer input dims");
  return std::make_shared<ComposedOperator>(std::move(outer), std::move(inner));
}

LinearOperatorPtr make_identity(Dims dims) {
  return std::make_shared<IdentityOperator>(dims);
}

Image gram_apply(const LinearOperator& H, double extra_diagonal, double scale,
                 const Image& x) {
  if (extra_diagonal < 0.0)
    throw std::invalid_argument("gram_apply: extra_diagonal must be non-negative");
  if (!(scale > 0.0))
    throw std::invalid_argument("gram_apply: scale must be positive");
  Image out = H.adjoint_apply(H.apply(x));
  out *= scale;
  if (extra_diagonal != 0.0) out += extra_diagonal * x;
  return out;
}

Image apply_symbol(const std::vector<std::complex<double>>& symbol, Dims dims,
                   const Image& x) {
  if (!(x.dims() == dims) || symbol.size() != x.size())
    throw std::invalid_argument("apply_symbol: dimension mismatch");
  fft::cvec buf(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) buf[i] = x[i];
  fft::forward2d(dims.width, dims.height, buf);
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= symbol[i];
  fft::inverse2d(dims.width, dims.height, buf);
  Image out(dims.width, dims.height);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i].real();
  return out;
}

} // namespace redsolve
