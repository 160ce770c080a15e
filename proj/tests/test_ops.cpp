#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "redsolve/fft.hpp"
#include "redsolve/linear_op.hpp"

using namespace redsolve;

namespace {

double adjoint_gap(const LinearOperator& H, std::uint64_t seed) {
  const Dims in = H.input_dims(), out = H.output_dims();
  const Image x = oracle::random_image(in.width, in.height, seed, -1.0, 1.0);
  const Image y = oracle::random_image(out.width, out.height, seed + 1, -1.0, 1.0);
  const double lhs = dot(H.apply(x), y);
  const double rhs = dot(x, H.adjoint_apply(y));
  return std::fabs(lhs - rhs) / (norm(x) * norm(y));
}

} // namespace

TEST_CASE("fft2d matches the naive DFT") {
  for (auto [w, h] : {std::pair{4, 4}, std::pair{6, 5}, std::pair{7, 3}}) {
    const Image x = oracle::random_image(w, h, 11, -1.0, 1.0);
    fft::cvec buf(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) buf[i] = x[i];
    const auto ref = oracle::naive_dft2(buf, w, h);
    fft::forward2d(w, h, buf);
    for (std::size_t i = 0; i < buf.size(); ++i)
      CHECK(std::abs(buf[i] - ref[i]) < 1e-9);
    fft::inverse2d(w, h, buf);
    for (std::size_t i = 0; i < buf.size(); ++i)
      CHECK(std::fabs(buf[i].real() - x[i]) < 1e-12);
  }
}

TEST_CASE("make_blur: size-1 kernel is the identity") {
  const auto H = make_blur(uniform_kernel(1), {8, 8});
  const Image x = oracle::random_image(8, 8, 3);
  const Image y = H->apply(x);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-15));
}

TEST_CASE("make_blur: normalized kernel preserves constants") {
  const auto H = make_blur(uniform_kernel(3), {10, 6});
  const Image c(10, 6, 42.5);
  const Image y = H->apply(c);
  for (std::size_t i = 0; i < y.size(); ++i) CHECK(y[i] == doctest::Approx(42.5).epsilon(1e-14));
}

TEST_CASE("make_blur: adjoint dot-product test on 16x16") {
  const auto H = make_blur(gaussian_kernel(5, 1.3), {16, 16});
  CHECK(adjoint_gap(*H, 77) <= 1e-8);
}

TEST_CASE("make_blur: preserves the image mean") {
  const auto H = make_blur(gaussian_kernel(7, 1.6), {24, 20});
  const Image x = oracle::random_image(24, 20, 13);
  double mx = 0.0, my = 0.0;
  const Image y = H->apply(x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  CHECK(std::fabs(mx - my) / std::fabs(mx) <= 1e-10);
}

TEST_CASE("make_blur: Fourier path agrees with spatial application") {
  for (auto [w, h] : {std::pair{16, 16}, std::pair{12, 18}}) {
    const auto H = make_blur(gaussian_kernel(5, 1.0), {w, h});
    REQUIRE(H->circulant_symbol() != nullptr);
    const Image x = oracle::random_image(w, h, 21);
    const Image spatial = H->apply(x);
    const Image fourier = apply_symbol(*H->circulant_symbol(), {w, h}, x);
    CHECK(norm(spatial - fourier) <= 1e-8 * norm(spatial));
  }
}

TEST_CASE("make_blur: rejects kernels larger than the image") {
  CHECK_THROWS_AS(make_blur(uniform_kernel(9), {8, 8}), std::invalid_argument);
}

TEST_CASE("make_decimation: factor 1 is the identity") {
  const auto D = make_decimation(1, {5, 5});
  const Image x = oracle::random_image(5, 5, 1);
  const Image y = D->apply(x);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(y[i] == x[i]);
}

TEST_CASE("make_decimation: keeps every factor-th pixel from offset 0") {
  const auto D = make_decimation(3, {6, 6});
  Image x(6, 6);
  for (int y = 0; y < 6; ++y)
    for (int i = 0; i < 6; ++i) x.at(i, y) = 10.0 * y + i;
  const Image lo = D->apply(x);
  CHECK(lo.dims() == Dims{2, 2});
  CHECK(lo.at(0, 0) == x.at(0, 0));
  CHECK(lo.at(1, 0) == x.at(3, 0));
  CHECK(lo.at(0, 1) == x.at(0, 3));
  CHECK(lo.at(1, 1) == x.at(3, 3));
}

TEST_CASE("make_decimation: offset knob shifts the sampling phase") {
  const auto D = make_decimation(3, {6, 6}, 1);
  Image x(6, 6);
  for (int y = 0; y < 6; ++y)
    for (int i = 0; i < 6; ++i) x.at(i, y) = 10.0 * y + i;
  const Image lo = D->apply(x);
  CHECK(lo.at(0, 0) == x.at(1, 1));
  CHECK(lo.at(1, 1) == x.at(4, 4));
  CHECK_THROWS_AS(make_decimation(3, {6, 6}, 3), std::invalid_argument);
}

TEST_CASE("make_decimation: adjoint zero-fills") {
  const auto D = make_decimation(3, {9, 6});
  const Image x = oracle::random_image(9, 6, 8, 1.0, 2.0); // strictly positive
  const Image back = D->adjoint_apply(D->apply(x));
  int nonzeros = 0;
  for (std::size_t i = 0; i < back.size(); ++i)
    if (back[i] != 0.0) ++nonzeros;
  CHECK(nonzeros == 9 * 6 / 9);
  CHECK(adjoint_gap(*D, 5) <= 1e-8);
  CHECK_THROWS_AS(make_decimation(4, {9, 6}), std::invalid_argument);
}

TEST_CASE("compose: identity is neutral") {
  const auto A = make_blur(gaussian_kernel(3, 0.8), {12, 12});
  const auto C = compose(make_identity({12, 12}), A);
  const Image x = oracle::random_image(12, 12, 31);
  CHECK(norm(C->apply(x) - A->apply(x)) == 0.0);
}

TEST_CASE("compose: super-resolution model passes the adjoint test") {
  const auto H =
      compose(make_decimation(3, {48, 48}), make_blur(gaussian_kernel(7, 1.6), {48, 48}));
  CHECK(H->circulant_symbol() == nullptr);
  CHECK(H->input_dims() == Dims{48, 48});
  CHECK(H->output_dims() == Dims{16, 16});
  CHECK(adjoint_gap(*H, 99) <= 1e-8);
}

TEST_CASE("compose: symbols multiply") {
  const auto A = make_blur(gaussian_kernel(5, 1.2), {16, 16});
  const auto B = make_blur(uniform_kernel(3), {16, 16});
  const auto C = compose(A, B);
  REQUIRE(C->circulant_symbol() != nullptr);
  const auto& sa = *A->circulant_symbol();
  const auto& sb = *B->circulant_symbol();
  const auto& sc = *C->circulant_symbol();
  for (std::size_t i = 0; i < sc.size(); ++i)
    CHECK(std::abs(sc[i] - sa[i] * sb[i]) <= 1e-10);
}

TEST_CASE("compose: associative up to floating point") {
  const auto A = make_blur(gaussian_kernel(3, 0.7), {14, 14});
  const auto B = make_blur(uniform_kernel(5), {14, 14});
  const auto C = make_blur(gaussian_kernel(5, 2.0), {14, 14});
  const auto left = compose(compose(A, B), C);
  const auto right = compose(A, compose(B, C));
  const Image x = oracle::random_image(14, 14, 17);
  const Image lx = left->apply(x), rx = right->apply(x);
  CHECK(norm(lx - rx) <= 1e-10 * norm(lx));
}

TEST_CASE("compose: rejects mismatched dims") {
  CHECK_THROWS_AS(
      compose(make_blur(uniform_kernel(3), {8, 8}), make_decimation(2, {12, 12})),
      std::invalid_argument);
}

TEST_CASE("gram_apply: identity operator gives (scale+diag)*x") {
  const auto I = make_identity({6, 6});
  const Image x = oracle::random_image(6, 6, 2);
  const Image y = gram_apply(*I, 0.3, 1.0, x);
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(y[i] == doctest::Approx(1.3 * x[i]).epsilon(1e-14));
}

TEST_CASE("gram_apply: matches explicit two-pass application") {
  const auto H = make_blur(gaussian_kernel(5, 1.1), {12, 10});
  const Image x = oracle::random_image(12, 10, 44);
  const Image direct = H->adjoint_apply(H->apply(x));
  const Image fused = gram_apply(*H, 0.0, 1.0, x);
  CHECK(norm(direct - fused) <= 1e-12 * norm(direct));
}

TEST_CASE("gram_apply: PSD as a quadratic form") {
  const auto H =
      compose(make_decimation(2, {12, 12}), make_blur(gaussian_kernel(3, 1.0), {12, 12}));
  for (int t = 0; t < 100; ++t) {
    const Image x = oracle::random_image(12, 12, 1000 + t, -1.0, 1.0);
    CHECK(dot(gram_apply(*H, 0.0, 0.5, x), x) >= -1e-12);
  }
  CHECK_THROWS_AS(gram_apply(*H, -1.0, 1.0, oracle::random_image(12, 12, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gram_apply(*H, 0.0, 0.0, oracle::random_image(12, 12, 1)),
                  std::invalid_argument);
}

TEST_CASE("adjoint test holds for every constructed operator") {
  std::uint64_t seed = 500;
  CHECK(adjoint_gap(*make_blur(uniform_kernel(9), {32, 32}), seed++) <= 1e-8);
  CHECK(adjoint_gap(*make_blur(gaussian_kernel(9, 1.6), {32, 32}), seed++) <= 1e-8);
  CHECK(adjoint_gap(*make_decimation(2, {32, 32}), seed++) <= 1e-8);
  CHECK(adjoint_gap(*make_identity({32, 32}), seed++) <= 1e-8);
  CHECK(adjoint_gap(*compose(make_decimation(4, {32, 32}),
                             make_blur(gaussian_kernel(7, 1.6), {32, 32})),
                    seed++) <= 1e-8);
}

TEST_CASE("blur symbol equals the DFT of the shifted kernel (oracle)") {
  const int w = 9, h = 9;
  const Kernel k = gaussian_kernel(3, 1.0);
  const auto H = make_blur(k, {w, h});
  fft::cvec padded(static_cast<std::size_t>(w) * h, {0.0, 0.0});
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      const int x = (i - 1 + w) % w;
      const int y = (j - 1 + h) % h;
      padded[static_cast<std::size_t>(y) * w + x] += k.tap(i, j);
    }
  const auto ref = oracle::naive_dft2(padded, w, h);
  const auto& sym = *H->circulant_symbol();
  for (std::size_t i = 0; i < sym.size(); ++i) CHECK(std::abs(sym[i] - ref[i]) < 1e-10);
}
