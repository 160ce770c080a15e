#include "redsolve/pgm.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace redsolve {

namespace {

// Skips whitespace and '#' comments, then reads one unsigned decimal token.
int read_header_int(std::istream& in, const char* what) {
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else if (std::isspace(ch)) {
      ch = in.get();
    } else {
      break;
    }
  }
  if (ch == EOF || !std::isdigit(ch))
    throw std::runtime_error(std::string("pgm: malformed header (expected ") + what + ")");
  long value = 0;
  while (ch != EOF && std::isdigit(ch)) {
    value = value * 10 + (ch - '0');
    if (value > 1000000)
      throw std::runtime_error(std::string("pgm: malformed header (") + what + " out of range)");
    ch = in.get();
  }
  if (ch != EOF) in.unget();
  return static_cast<int>(value);
}

} // namespace

Image read_pgm(std::istream& in) {
  char m0 = 0, m1 = 0;
  in.get(m0);
  in.get(m1);
  if (!in || m0 != 'P' || (m1 != '5' && m1 != '2'))
    throw std::runtime_error("pgm: malformed header (bad magic)");
  const bool binary = (m1 == '5');

  const int width = read_header_int(in, "width");
  const int height = read_header_int(in, "height");
  const int maxval = read_header_int(in, "maxval");
  if (width < 1 || height < 1)
    throw std::runtime_error("pgm: malformed header (non-positive dimensions)");
  if (maxval != 255)
    throw std::runtime_error("pgm: unsupported maxval (only 255)");

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<double> data(count);

  if (binary) {
    int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
      throw std::runtime_error("pgm: malformed header (missing separator)");
    std::vector<unsigned char> bytes(count);
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(count));
    if (static_cast<std::size_t>(in.gcount()) != count)
      throw std::runtime_error("pgm: truncated payload");
    for (std::size_t i = 0; i < count; ++i) data[i] = bytes[i];
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      int v;
      if (!(in >> v))
        throw std::runtime_error("pgm: truncated payload");
      if (v < 0 || v > maxval)
        throw std::runtime_error("pgm: sample out of range");
      data[i] = v;
    }
  }
  return Image(width, height, std::move(data));
}

void write_pgm(std::ostream& out, const Image& img) {
  out << "P5\n" << img.width() << " " << img.height() << "\n255\n";
  std::vector<unsigned char> bytes(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    double v = std::llround(img[i]);
    if (v < 0.0) v = 0.0;
    if (v > 255.0) v = 255.0;
    bytes[i] = static_cast<unsigned char>(v);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("pgm: write failed");
}

Image load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("pgm: cannot open " + path);
  return read_pgm(in);
}

void save_pgm(const std::string& path, const Image& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("pgm: cannot open " + path + " for writing");
  write_pgm(out, img);
}

} // namespace redsolve
