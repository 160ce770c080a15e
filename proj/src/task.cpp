#include "redsolve/task.hpp"

#include <cmath>
#include <stdexcept>

#include "redsolve/noise.hpp"

namespace redsolve {

TaskSpec TaskSpec::standard(TaskKind kind, std::uint64_t seed) {
  TaskSpec t;
  t.kind = kind;
  t.seed = seed;
  switch (kind) {
    case TaskKind::deblur_uniform:
      t.kernel_size = 9;
      t.noise_sigma = std::sqrt(2.0);
      break;
    case TaskKind::deblur_gaussian:
      t.kernel_size = 9;
      t.kernel_std = 1.6;
      t.noise_sigma = std::sqrt(2.0);
      break;
    case TaskKind::super_resolution:
      t.kernel_size = 7;
      t.kernel_std = 1.6;
      t.sr_factor = 3;
      t.noise_sigma = 5.0;
      break;
  }
  return t;
}

Degradation degrade(const TaskSpec& task, const Image& clean) {
  const Dims dims = clean.dims();
  const Kernel kernel = task.kind == TaskKind::deblur_uniform
                            ? uniform_kernel(task.kernel_size)
                            : gaussian_kernel(task.kernel_size, task.kernel_std);
  LinearOperatorPtr H = make_blur(kernel, dims);
  if (task.kind == TaskKind::super_resolution)
    H = compose(make_decimation(task.sr_factor, dims, task.decimation_offset),
                std::move(H));
  Image y = add_gaussian_noise(H->apply(clean), task.noise_sigma, task.seed);
  return {std::move(y), std::move(H)};
}

Image initial_iterate(const TaskSpec& task, const Image& measurement) {
  if (task.kind != TaskKind::super_resolution) return measurement;
  const int f = task.sr_factor;
  Image out(measurement.width() * f, measurement.height() * f);
  for (int y = 0; y < out.height(); ++y)
    for (int x = 0; x < out.width(); ++x)
      out.at(x, y) = measurement.at(x / f, y / f);
  return out;
}

} // namespace redsolve
