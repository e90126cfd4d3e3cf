#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tracedist/bitstring.hpp"
#include "tracedist/circle.hpp"

namespace tracedist {

/// Traces of one length-n source, with the parameters that produced them.
struct TraceBatch {
  std::size_t source_length = 0;
  std::vector<BitString> traces;
  std::uint64_t seed = 0;
  CircleParams channel;
};

/// Per-position means E_j = E[trace_j] for j = 0..n-1, zero-padded past the trace end.
struct MeanProfile {
  std::vector<double> values;
  std::size_t source_length = 0;
  CircleParams channel;
  std::uint64_t sample_count = 0;  // 0 for exact profiles
};

/// Trace `index` of x: bit i survives iff a uniform draw keyed by (seed, index, i) is < q.
BitString sample_trace(const BitString& x, const CircleParams& c, std::uint64_t seed,
                       std::uint64_t index);

/// Traces first_index .. first_index + count - 1.
TraceBatch sample_batch(const BitString& x, const CircleParams& c, std::uint64_t seed,
                        std::uint64_t count, std::uint64_t first_index = 0);

/// Same result as empirical_mean_profile(sample_batch(...)) without storing the traces.
MeanProfile simulate_mean_profile(const BitString& x, const CircleParams& c, std::uint64_t seed,
                                  std::uint64_t count, std::uint64_t first_index = 0);

/// Position-wise average with zero padding to the source length. Throws on an empty batch.
MeanProfile empirical_mean_profile(const TraceBatch& batch);

/// E_j = sum_k C(k, j) p^{k-j} q^{j+1} x_k. Exact rational arithmetic when p is rational,
/// otherwise compensated binary64 summation.
MeanProfile exact_mean_profile(const BitString& x, const CircleParams& c);

/// The same expectations for an arbitrary integer coefficient vector (linear in the
/// coefficients), e.g. x - y. Entries may be negative.
std::vector<double> coefficient_mean_profile(const std::vector<long>& coeffs,
                                             const CircleParams& c);

/// Exact profile for rational p.
std::vector<mpq_class> exact_mean_profile_rational(const BitString& x, const mpq_class& p);

/// sum_j |E_j(x) - E_j(y)|, computed from the exact difference profile.
double profile_l1_separation(const BitString& x, const BitString& y, const CircleParams& c);

/// Phi_k(trace) = sum_i C(i, k) trace_i.
double potential(const BitString& trace, unsigned k);

/// sum_j C(j, k) E_j of a profile; for an empirical profile this is the mean of Phi_k.
double profile_potential(const MeanProfile& profile, unsigned k);

/// E[Phi_k] = q^{k+1} sum_j C(j, k) x_j. Requires k <= n - 1.
double exact_potential_expectation(const BitString& x, const CircleParams& c, unsigned k);
mpq_class exact_potential_expectation_rational(const BitString& x, const mpq_class& p, unsigned k);

/// sum_j C(j, k) x_j, the integer part of E[Phi_k].
mpz_class potential_index_sum(const BitString& x, unsigned k);

}  // namespace tracedist
