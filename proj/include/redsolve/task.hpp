#pragma once

#include <cstdint>

#include "redsolve/image.hpp"
#include "redsolve/linear_op.hpp"

namespace redsolve {

enum class TaskKind { deblur_uniform, deblur_gaussian, super_resolution };

// Degradation protocol: blur kernel (plus decimation for super-resolution)
// and additive Gaussian noise. standard() fills in the benchmark defaults:
// 9x9 uniform / 9x9 Gaussian std 1.6 with noise sigma sqrt(2) for
// deblurring, 7x7 Gaussian std 1.6 + factor 3 with sigma 5 for SR.
struct TaskSpec {
  TaskKind kind = TaskKind::deblur_uniform;
  int kernel_size = 9;
  double kernel_std = 1.6;   // Gaussian kernels only
  int sr_factor = 3;         // super-resolution only
  double noise_sigma = 0.0;
  std::uint64_t seed = 1;
  int decimation_offset = 0;

  static TaskSpec standard(TaskKind kind, std::uint64_t seed);
};

struct Degradation {
  Image measurement;
  LinearOperatorPtr H;
};

// y = H(clean) + noise(seed); H built from the task parameters.
Degradation degrade(const TaskSpec& task, const Image& clean);

// Solver starting point: the measurement itself for deblurring,
// nearest-neighbor upscaling for super-resolution.
Image initial_iterate(const TaskSpec& task, const Image& measurement);

} // namespace redsolve
