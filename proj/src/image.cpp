#include "redsolve/image.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace redsolve {

Image::Image(int width, int height, double fill)
    : width_(width), height_(height),
      data_(static_cast<std::size_t>(width) * height, fill) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("Image: dimensions must be positive");
}

Image::Image(int width, int height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("Image: dimensions must be positive");
  if (data_.size() != static_cast<std::size_t>(width) * height)
    throw std::invalid_argument("Image: data length does not match width*height");
}

Image& Image::operator+=(const Image& rhs) {
  require_same_dims(*this, rhs, "Image::operator+=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Image& Image::operator-=(const Image& rhs) {
  require_same_dims(*this, rhs, "Image::operator-=");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Image& Image::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

bool Image::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

Image operator+(Image lhs, const Image& rhs) { lhs += rhs; return lhs; }
Image operator-(Image lhs, const Image& rhs) { lhs -= rhs; return lhs; }
Image operator*(double s, Image img) { img *= s; return img; }

double dot(const Image& a, const Image& b) {
  require_same_dims(a, b, "dot");
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

double norm(const Image& a) { return std::sqrt(dot(a, a)); }

double max_abs(const Image& a) {
  double r = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::fabs(a[i]));
  return r;
}

Image axpy(const Image& a, double s, const Image& b) {
  require_same_dims(a, b, "axpy");
  Image out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * b[i];
  return out;
}

void require_same_dims(const Image& a, const Image& b, const char* context) {
  if (!(a.dims() == b.dims()))
    throw std::invalid_argument(std::string(context) + ": dimension mismatch (" +
                                std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                                " vs " + std::to_string(b.width()) + "x" +
                                std::to_string(b.height()) + ")");
}

double psnr(const Image& reference, const Image& test) {
  require_same_dims(reference, test, "psnr");
  double sse = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = reference[i] - test[i];
    sse += d * d;
  }
  const double mse = sse / static_cast<double>(reference.size());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

} // namespace redsolve
