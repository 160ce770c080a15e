#pragma once

#include <string>

#include "redsolve/denoiser.hpp"

namespace redsolve {

// Plugin boundary for external denoisers: each call spawns `command` via
// /bin/sh -c, writes one PGM to its standard input and reads one PGM from
// its standard output. The child must exit with status 0. Note that the
// PGM handoff quantizes intensities to integers in [0,255].
class ProcessDenoiser final : public Denoiser {
public:
  explicit ProcessDenoiser(std::string command);

protected:
  Image do_denoise(const Image& x) const override;

private:
  std::string command_;
};

} // namespace redsolve
