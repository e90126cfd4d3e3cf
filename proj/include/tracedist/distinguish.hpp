#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "tracedist/bitstring.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/circle.hpp"

namespace tracedist {

enum class Hypothesis { X, Y };
enum class Method { Potential, Mean };
enum class ProfileMetric { L1, LInf };

std::string to_string(Hypothesis h);
std::string to_string(Method m);

/// Outcome of a two-hypothesis test. Exact ties resolve to X with `tie` set.
///
/// For Method::Potential `statistic` is the estimated potential; for Method::Mean it is
/// dist(profile, E(x)) - dist(profile, E(y)). `margin` is |dist_x - dist_y| in both cases.
struct Decision {
  Hypothesis choice = Hypothesis::X;
  double statistic = 0.0;
  double margin = 0.0;
  Method method = Method::Potential;
  std::optional<unsigned> k;
  std::uint64_t samples = 0;
  bool tie = false;
};

/// Smallest k <= d - 1 whose exact potential gap |E_x[Phi_k] - E_y[Phi_k]| is at least q^{k+1}.
/// Throws InputError when x == y, lengths differ, or the Hamming distance exceeds d;
/// InvariantError if no such k exists.
unsigned select_k(const BitString& x, const BitString& y, const CircleParams& c, unsigned d);

/// ceil(10 (n/q)^{2(d+2)}), exact for the stored representation of q.
mpz_class required_samples(unsigned long n, unsigned d, const CircleParams& c);

/// Potential-function test with k = select_k(x, y, c, hamming_distance(x, y)).
Decision potential_distinguish(const MeanProfile& profile, const BitString& x, const BitString& y,
                               const CircleParams& c);
Decision potential_distinguish(const TraceBatch& batch, const BitString& x, const BitString& y,
                               const CircleParams& c);

/// Nearest exact profile under the chosen metric (L1 by default).
Decision mean_based_distinguish(const MeanProfile& profile, const BitString& x,
                                const BitString& y, const CircleParams& c,
                                ProfileMetric metric = ProfileMetric::L1);
Decision mean_based_distinguish(const TraceBatch& batch, const BitString& x, const BitString& y,
                                const CircleParams& c, ProfileMetric metric = ProfileMetric::L1);

}  // namespace tracedist
