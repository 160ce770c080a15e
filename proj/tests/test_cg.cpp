#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "redsolve/cg.hpp"
#include "redsolve/linear_op.hpp"

using namespace redsolve;

TEST_CASE("cg_solve: identity system returns b in one iteration") {
  const Image b = oracle::random_image(4, 4, 1);
  const auto res = cg_solve([](const Image& v) { return v; }, b, Image(4, 4, 0.0),
                            1e-12, 10);
  CHECK(res.iterations == 1);
  CHECK(norm(res.x - b) <= 1e-12 * norm(b));
  CHECK(res.relative_residual <= 1e-12);
}

TEST_CASE("cg_solve: diagonal system solved exactly within n iterations") {
  const std::vector<double> diag = {1.0, 2.0, 3.0, 4.0};
  const auto A = [&](const Image& v) {
    Image out = v;
    for (std::size_t i = 0; i < 4; ++i) out[i] *= diag[i];
    return out;
  };
  const Image b(4, 1, std::vector<double>{2.3, -1.1, 0.7, 5.2});
  const auto res = cg_solve(A, b, Image(4, 1, 0.0), 1e-12, 10);
  CHECK(res.iterations <= 4);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(res.x[i] == doctest::Approx(b[i] / diag[i]).epsilon(1e-10));
}

TEST_CASE("cg_solve: rank-one shifted system matches Sherman-Morrison") {
  const int n = 12;
  const Image u = oracle::random_image(n, 1, 31, -1.0, 1.0);
  const double a = 0.8;
  const auto A = [&](const Image& v) { return axpy(a * v, dot(u, v), u); };
  const Image b = oracle::random_image(n, 1, 32, -2.0, 2.0);
  const auto res = cg_solve(A, b, Image(n, 1, 0.0), 1e-12, 50);
  // (aI + u u^T)^{-1} b = b/a - u <u,b> / (a (a + <u,u>))
  const double uu = dot(u, u), ub = dot(u, b);
  Image ref = (1.0 / a) * b;
  ref -= (ub / (a * (a + uu))) * u;
  CHECK(norm(res.x - ref) <= 1e-9 * norm(ref));
}

TEST_CASE("cg_solve: residual is reported and within tolerance") {
  const auto H = make_blur(gaussian_kernel(5, 1.2), {16, 16});
  const auto A = [&](const Image& v) { return gram_apply(*H, 0.05, 1.0, v); };
  const Image b = oracle::random_image(16, 16, 44);
  const auto res = cg_solve(A, b, Image(16, 16, 0.0), 1e-8, 500);
  CHECK(res.relative_residual <= 1e-8);
  CHECK(norm(b - A(res.x)) <= 1e-8 * norm(b));
}

TEST_CASE("cg_solve: error decreases monotonically in the A-norm") {
  // rerun with growing iteration caps; the k-th return is the k-th CG
  // iterate, and its A-norm distance to the exact solution must shrink
  const auto H = make_blur(gaussian_kernel(3, 0.9), {6, 6});
  const auto A = [&](const Image& v) { return gram_apply(*H, 0.2, 1.0, v); };
  const Image b = oracle::random_image(6, 6, 77);
  const Image x0(6, 6, 0.0);

  const auto Am = oracle::dense_from_map(A, 6, 6);
  const Image xstar = oracle::from_vec(6, 6, oracle::dense_solve(Am, oracle::to_vec(b)));

  double prev = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= 20; ++k) {
    const auto res = cg_solve(A, b, x0, 1e-14, k);
    const Image e = res.x - xstar;
    const double a_norm = std::sqrt(dot(A(e), e));
    CHECK(a_norm <= prev * (1.0 + 1e-12));
    prev = a_norm;
  }
}

TEST_CASE("cg_solve: zero right-hand side returns zero") {
  const auto res = cg_solve([](const Image& v) { return v; }, Image(3, 3, 0.0),
                            oracle::random_image(3, 3, 2), 1e-10, 10);
  CHECK(res.iterations == 0);
  CHECK(norm(res.x) == 0.0);
}

TEST_CASE("cg_solve: indefinite operators raise") {
  const auto A = [](const Image& v) { return -1.0 * v; };
  const Image b = oracle::random_image(4, 4, 3);
  CHECK_THROWS_AS(cg_solve(A, b, Image(4, 4, 0.0), 1e-10, 10), std::runtime_error);
}
