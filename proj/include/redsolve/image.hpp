#pragma once

#include <cstddef>
#include <vector>

namespace redsolve {

struct Dims {
  int width = 0;
  int height = 0;
  bool operator==(const Dims&) const = default;
};

// Grayscale image with double-precision intensities, row-major storage.
// The nominal range is [0,255] but optimization iterates may leave it;
// clamping happens only at PGM write time.
class Image {
public:
  Image() = default;
  Image(int width, int height, double fill = 0.0);
  Image(int width, int height, std::vector<double> data);

  int width() const { return width_; }
  int height() const { return height_; }
  Dims dims() const { return {width_, height_}; }
  std::size_t size() const { return data_.size(); }

  double& at(int x, int y) { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  double at(int x, int y) const { return data_[static_cast<std::size_t>(y) * width_ + x]; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  Image& operator+=(const Image& rhs);
  Image& operator-=(const Image& rhs);
  Image& operator*=(double s);

  bool all_finite() const;

private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> data_;
};

Image operator+(Image lhs, const Image& rhs);
Image operator-(Image lhs, const Image& rhs);
Image operator*(double s, Image img);

double dot(const Image& a, const Image& b);
double norm(const Image& a);
double max_abs(const Image& a);

// a + s*b
Image axpy(const Image& a, double s, const Image& b);

void require_same_dims(const Image& a, const Image& b, const char* context);

// 10*log10(255^2 / MSE); +infinity when the images are identical.
double psnr(const Image& reference, const Image& test);

} // namespace redsolve
