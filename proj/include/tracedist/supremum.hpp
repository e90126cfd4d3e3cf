#pragma once

#include <cstddef>

#include "tracedist/circle.hpp"
#include "tracedist/polynomial.hpp"

namespace tracedist {

struct SupremumOptions {
  std::size_t grid = std::size_t{1} << 16;  // coarse theta samples over [-pi, pi)
  unsigned refine_rounds = 6;
  std::size_t cells_per_round = 16;  // cells with the largest bound split per round
  std::size_t subdivision = 16;      // children per split cell
};

/// Interval [lower, upper] containing sup |f(w)| over w = p + q e^{i theta}.
///
/// lower is |f| at witness_theta. upper is the largest cell bound over a cover of [-pi, pi]
/// by cells. With g(theta) = f(p + q e^{i theta}), a cell of radius r around t is bounded by
/// the smallest of the Taylor estimates
///
///   |g(t)| + r L
///   |g(t)| + r |g'(t)| + r^2 M2 / 2
///   |g(t)| + r |g'(t)| + r^2 |g''(t)| / 2 + r^3 M3 / 6
///
/// where L = q sum k |a_k|, M2 = q^2 sum k(k-1) |a_k| + L and
/// M3 = q^3 sum k(k-1)(k-2) |a_k| + 3 q^2 sum k(k-1) |a_k| + L bound |g'|, |g''|, |g'''|.
struct SupremumCertificate {
  double lower = 0.0;
  double upper = 0.0;
  double witness_theta = 0.0;
  std::size_t grid_points = 0;
  unsigned refine_rounds = 0;
  double lipschitz_bound = 0.0;
  double curvature_bound = 0.0;  // M2
};

/// Throws InputError when grid < 8 or the refinement parameters are zero.
SupremumCertificate circle_supremum(const IntPolynomial& f, const CircleParams& c,
                                    const SupremumOptions& options = {});

}  // namespace tracedist
