#include "tracedist/distinguish.hpp"

#include <algorithm>
#include <cmath>

#include "tracedist/error.hpp"
#include "tracedist/numeric.hpp"
#include "tracedist/strings.hpp"

namespace tracedist {

namespace {

void require_distinct_pair(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw InputError("unequal lengths");
  if (x == y) throw InputError("strings must differ");
}

void require_profile_length(const MeanProfile& profile, const BitString& x) {
  if (profile.source_length != x.size() || profile.values.size() != x.size()) {
    throw InputError("profile length does not match the candidate strings");
  }
}

Decision decide(double dist_x, double dist_y, Method method) {
  Decision d;
  d.method = method;
  d.margin = std::abs(dist_x - dist_y);
  d.tie = dist_x == dist_y;
  d.choice = dist_x <= dist_y ? Hypothesis::X : Hypothesis::Y;
  return d;
}

}  // namespace

std::string to_string(Hypothesis h) { return h == Hypothesis::X ? "X" : "Y"; }

std::string to_string(Method m) { return m == Method::Potential ? "potential" : "mean"; }

unsigned select_k(const BitString& x, const BitString& y, const CircleParams& c, unsigned d) {
  require_distinct_pair(x, y);
  if (hamming_distance(x, y) > d) throw InputError("Hamming distance exceeds d");
  (void)c;  // the gap is q^{k+1} |integer|, so the threshold test is independent of q
  for (unsigned k = 0; k < d && k < x.size(); ++k) {
    if (potential_index_sum(x, k) != potential_index_sum(y, k)) return k;
  }
  throw InvariantError("no potential index separates the pair; contradicts the Hamming gap lemma");
}

mpz_class required_samples(unsigned long n, unsigned d, const CircleParams& c) {
  // A binary64 q is itself an exact dyadic rational.
  const mpq_class q = c.exact_q() ? *c.exact_q() : mpq_class(c.q());
  const mpq_class ratio = mpq_class(mpz_class(n)) / q;
  mpz_class num, den;
  const unsigned long e = 2ul * (d + 2);
  mpz_pow_ui(num.get_mpz_t(), ratio.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), ratio.get_den().get_mpz_t(), e);
  num *= 10;
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Decision potential_distinguish(const MeanProfile& profile, const BitString& x, const BitString& y,
                               const CircleParams& c) {
  require_distinct_pair(x, y);
  require_profile_length(profile, x);
  const unsigned k = select_k(x, y, c, static_cast<unsigned>(hamming_distance(x, y)));
  const double estimate = profile_potential(profile, k);
  const double dist_x = std::abs(estimate - exact_potential_expectation(x, c, k));
  const double dist_y = std::abs(estimate - exact_potential_expectation(y, c, k));
  Decision d = decide(dist_x, dist_y, Method::Potential);
  d.statistic = estimate;
  d.k = k;
  d.samples = profile.sample_count;
  return d;
}

Decision potential_distinguish(const TraceBatch& batch, const BitString& x, const BitString& y,
                               const CircleParams& c) {
  return potential_distinguish(empirical_mean_profile(batch), x, y, c);
}

Decision mean_based_distinguish(const MeanProfile& profile, const BitString& x,
                                const BitString& y, const CircleParams& c, ProfileMetric metric) {
  require_distinct_pair(x, y);
  require_profile_length(profile, x);
  const MeanProfile ex = exact_mean_profile(x, c);
  const MeanProfile ey = exact_mean_profile(y, c);
  auto distance = [&](const MeanProfile& target) {
    if (metric == ProfileMetric::LInf) {
      double worst = 0.0;
      for (std::size_t j = 0; j < target.values.size(); ++j) {
        worst = std::max(worst, std::abs(profile.values[j] - target.values[j]));
      }
      return worst;
    }
    CompensatedSum total;
    for (std::size_t j = 0; j < target.values.size(); ++j) {
      total.add(std::abs(profile.values[j] - target.values[j]));
    }
    return total.value();
  };
  const double dist_x = distance(ex);
  const double dist_y = distance(ey);
  Decision d = decide(dist_x, dist_y, Method::Mean);
  d.statistic = dist_x - dist_y;
  d.samples = profile.sample_count;
  return d;
}

Decision mean_based_distinguish(const TraceBatch& batch, const BitString& x, const BitString& y,
                                const CircleParams& c, ProfileMetric metric) {
  return mean_based_distinguish(empirical_mean_profile(batch), x, y, c, metric);
}

}  // namespace tracedist
