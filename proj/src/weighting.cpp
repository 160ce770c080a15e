#include "redsolve/weighting.hpp"

#include <cmath>
#include <stdexcept>

namespace redsolve {

Image Weighting::apply(const Image& v) const {
  if (!(tau > 0.0)) throw std::invalid_argument("Weighting: tau must be positive");
  Image out = tau * v;
  if (u) out += dot(*u, v) * *u;
  return out;
}

Sr1Result sr1_weighting(int k, const Image& x_k, const Image& x_km1,
                        const Image& grad_g_k, const Image& grad_g_km1,
                        double alpha, double gamma, double delta) {
  if (!(alpha > 0.0)) throw std::invalid_argument("sr1_weighting: alpha must be positive");
  if (!(gamma > 1.0)) throw std::invalid_argument("sr1_weighting: gamma must be > 1");
  if (!(delta > 0.0)) throw std::invalid_argument("sr1_weighting: delta must be positive");

  if (k <= 1) return {Weighting{alpha, std::nullopt}, Sr1Branch::initial};

  const Image s = x_k - x_km1;
  const Image m = grad_g_k - grad_g_km1;
  const double curvature = dot(s, m);
  const double ss = dot(s, s);
  if (!(curvature > 0.0) || ss == 0.0)
    return {Weighting{alpha, std::nullopt}, Sr1Branch::fallback};

  const double tau = curvature / (gamma * ss);
  const Image v = axpy(m, -tau, s); // m - H0 s
  const double d = dot(v, s);
  if (std::fabs(d) <= delta * std::sqrt(ss) * norm(v))
    return {Weighting{tau, std::nullopt}, Sr1Branch::skip_rank_one};
  if (d < 0.0) // cannot happen in exact arithmetic with gamma > 1
    return {Weighting{alpha, std::nullopt}, Sr1Branch::fallback};

  return {Weighting{tau, (1.0 / std::sqrt(d)) * v}, Sr1Branch::rank_one};
}

} // namespace redsolve
