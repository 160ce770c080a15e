#include "redsolve/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace redsolve::fft {

namespace {

// Plan creation/destruction is not thread-safe in FFTW; executing a plan on
// new arrays is. Plans are cached per (width, height, sign) and created with
// FFTW_UNALIGNED so the new-array execute interface accepts any buffer.
class PlanCache {
public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int width, int height, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    const Key key{width, height, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    std::vector<fftw_complex> scratch(static_cast<std::size_t>(width) * height);
    fftw_plan plan = fftw_plan_dft_2d(height, width, scratch.data(), scratch.data(),
                                      sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("fft: plan creation failed");
    plans_.emplace(key, plan);
    return plan;
  }

private:
  using Key = std::tuple<int, int, int>;
  std::mutex mutex_;
  std::map<Key, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

void execute(int width, int height, int sign, cvec& values) {
  if (values.size() != static_cast<std::size_t>(width) * height)
    throw std::invalid_argument("fft: buffer size does not match dimensions");
  fftw_plan plan = cache().get(width, height, sign);
  auto* ptr = reinterpret_cast<fftw_complex*>(values.data());
  fftw_execute_dft(plan, ptr, ptr);
}

} // namespace

void forward2d(int width, int height, cvec& values) {
  execute(width, height, FFTW_FORWARD, values);
}

void inverse2d(int width, int height, cvec& values) {
  execute(width, height, FFTW_BACKWARD, values);
  const double scale = 1.0 / (static_cast<double>(width) * height);
  for (auto& v : values) v *= scale;
}

} // namespace redsolve::fft
