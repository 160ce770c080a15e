#pragma once

#include <iosfwd>
#include <string>

#include "redsolve/image.hpp"

namespace redsolve {

// PGM (P5 binary / P2 ASCII) with maxval 255. Intensities are stored
// raw in memory; clamping to [0,255] and rounding happen at write time only.
// Writes always emit canonical P5: "P5\n<w> <h>\n255\n" followed by the payload.

Image read_pgm(std::istream& in);
void write_pgm(std::ostream& out, const Image& img);

Image load_pgm(const std::string& path);
void save_pgm(const std::string& path, const Image& img);

} // namespace redsolve
