#include "tracedist/channel.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "tracedist/error.hpp"
#include "tracedist/numeric.hpp"
#include "tracedist/rng.hpp"

namespace tracedist {

namespace {

// Adds the surviving bits of trace `index` into counts by output position.
void accumulate_trace(const BitString& x, double q, std::uint64_t seed, std::uint64_t index,
                      std::vector<std::uint64_t>& counts) {
  const CounterRng rng(seed, index);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (rng.uniform(i) < q) counts[pos++] += x[i];
  }
}

std::vector<mpz_class> powers(const mpz_class& base, std::size_t count) {
  std::vector<mpz_class> out(count);
  if (count == 0) return out;
  out[0] = 1;
  for (std::size_t i = 1; i < count; ++i) out[i] = out[i - 1] * base;
  return out;
}

// Exact profile of an integer coefficient vector for p = a/b, over the common denominator b^n.
std::vector<mpq_class> rational_profile(const std::vector<long>& coeffs, const mpq_class& p) {
  const std::size_t n = coeffs.size();
  std::vector<mpq_class> out(n);
  if (n == 0) return out;
  const mpz_class a = p.get_num();
  const mpz_class b = p.get_den();
  const auto pow_a = powers(a, n);
  const auto pow_b = powers(b, n + 1);
  const auto pow_r = powers(b - a, n + 1);
  std::vector<mpz_class> num(n);
  std::vector<mpz_class> row{1};  // C(k, .) for the current k
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      std::vector<mpz_class> next(k + 1);
      next[0] = 1;
      next[k] = 1;
      for (std::size_t j = 1; j < k; ++j) next[j] = row[j - 1] + row[j];
      row = std::move(next);
    }
    if (coeffs[k] == 0) continue;
    const mpz_class scale = pow_b[n - k - 1] * coeffs[k];
    for (std::size_t j = 0; j <= k; ++j) num[j] += row[j] * pow_a[k - j] * pow_r[j + 1] * scale;
  }
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = mpq_class(num[j], pow_b[n]);
    out[j].canonicalize();
  }
  return out;
}

// Binary64 profile; each term C(k,j) p^{k-j} q^{j+1} is assembled in the log domain so that
// large binomials do not overflow.
std::vector<double> float_profile(const std::vector<long>& coeffs, double p, double q) {
  const std::size_t n = coeffs.size();
  std::vector<double> out(n, 0.0);
  if (p == 0.0) {
    for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<double>(coeffs[j]);
    return out;
  }
  const double log2_p = std::log2(p);
  const double log2_q = std::log2(q);
  std::vector<CompensatedSum> sums(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      const mpz_class binom = binomial(k, j);
      long exp = 0;
      const double mant = mpz_get_d_2exp(&exp, binom.get_mpz_t());
      const double scale = static_cast<double>(exp) + static_cast<double>(k - j) * log2_p +
                           static_cast<double>(j + 1) * log2_q;
      sums[j].add(static_cast<double>(coeffs[k]) * mant * std::exp2(scale));
    }
  }
  for (std::size_t j = 0; j < n; ++j) out[j] = sums[j].value();
  return out;
}

std::vector<long> as_coefficients(const BitString& x) {
  return std::vector<long>(x.begin(), x.end());
}

}  // namespace

BitString sample_trace(const BitString& x, const CircleParams& c, std::uint64_t seed,
                       std::uint64_t index) {
  const CounterRng rng(seed, index);
  BitString out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (rng.uniform(i) < c.q()) out.push_back(x[i]);
  }
  return out;
}

TraceBatch sample_batch(const BitString& x, const CircleParams& c, std::uint64_t seed,
                        std::uint64_t count, std::uint64_t first_index) {
  TraceBatch batch{x.size(), {}, seed, c};
  batch.traces.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    batch.traces.push_back(sample_trace(x, c, seed, first_index + t));
  }
  return batch;
}

MeanProfile simulate_mean_profile(const BitString& x, const CircleParams& c, std::uint64_t seed,
                                  std::uint64_t count, std::uint64_t first_index) {
  if (count == 0) throw InputError("empty batch");
  const std::size_t n = x.size();
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
  auto run = [&](std::uint64_t w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(count, lo + chunk);
    for (std::uint64_t t = lo; t < hi; ++t) {
      accumulate_trace(x, c.q(), seed, first_index + t, partial[w]);
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  // Integer counts make the merge order irrelevant.
  MeanProfile profile{std::vector<double>(n, 0.0), n, c, count};
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t total = 0;
    for (const auto& counts : partial) total += counts[j];
    profile.values[j] = static_cast<double>(total) / static_cast<double>(count);
  }
  return profile;
}

MeanProfile empirical_mean_profile(const TraceBatch& batch) {
  if (batch.traces.empty()) throw InputError("empty batch");
  const std::size_t n = batch.source_length;
  std::vector<std::uint64_t> counts(n, 0);
  for (const auto& trace : batch.traces) {
    if (trace.size() > n) throw InputError("trace longer than the source length");
    for (std::size_t j = 0; j < trace.size(); ++j) counts[j] += trace[j];
  }
  MeanProfile profile{std::vector<double>(n, 0.0), n, batch.channel, batch.traces.size()};
  for (std::size_t j = 0; j < n; ++j) {
    profile.values[j] =
        static_cast<double>(counts[j]) / static_cast<double>(batch.traces.size());
  }
  return profile;
}

std::vector<double> coefficient_mean_profile(const std::vector<long>& coeffs,
                                             const CircleParams& c) {
  if (c.exact_p()) {
    const auto exact = rational_profile(coeffs, *c.exact_p());
    std::vector<double> out(exact.size());
    std::transform(exact.begin(), exact.end(), out.begin(),
                   [](const mpq_class& v) { return to_double(v); });
    return out;
  }
  return float_profile(coeffs, c.p(), c.q());
}

MeanProfile exact_mean_profile(const BitString& x, const CircleParams& c) {
  return {coefficient_mean_profile(as_coefficients(x), c), x.size(), c, 0};
}

std::vector<mpq_class> exact_mean_profile_rational(const BitString& x, const mpq_class& p) {
  if (p < 0 || p >= 1) throw InputError("deletion probability must lie in [0, 1)");
  return rational_profile(as_coefficients(x), p);
}

double profile_l1_separation(const BitString& x, const BitString& y, const CircleParams& c) {
  if (x.size() != y.size()) throw InputError("unequal lengths");
  std::vector<long> diff(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = long{x[i]} - long{y[i]};
  if (c.exact_p()) {
    mpq_class total;
    for (const auto& v : rational_profile(diff, *c.exact_p())) total += abs(v);
    return to_double(total);
  }
  CompensatedSum total;
  for (double v : float_profile(diff, c.p(), c.q())) total.add(std::abs(v));
  return total.value();
}

double potential(const BitString& trace, unsigned k) {
  mpz_class total;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (trace[i]) total += binomial(i, k);
  }
  return to_double(total);
}

double profile_potential(const MeanProfile& profile, unsigned k) {
  CompensatedSum total;
  for (std::size_t j = 0; j < profile.values.size(); ++j) {
    if (j < k) continue;
    total.add(to_double(binomial(j, k)) * profile.values[j]);
  }
  return total.value();
}

mpz_class potential_index_sum(const BitString& x, unsigned k) {
  mpz_class total;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j]) total += binomial(j, k);
  }
  return total;
}

double exact_potential_expectation(const BitString& x, const CircleParams& c, unsigned k) {
  if (x.empty() || k > x.size() - 1) throw InputError("potential index k out of range");
  if (const auto p = c.exact_p()) return to_double(exact_potential_expectation_rational(x, *p, k));
  return std::pow(c.q(), static_cast<double>(k) + 1.0) * to_double(potential_index_sum(x, k));
}

mpq_class exact_potential_expectation_rational(const BitString& x, const mpq_class& p, unsigned k) {
  if (x.empty() || k > x.size() - 1) throw InputError("potential index k out of range");
  const mpq_class q = 1 - p;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), k + 1);
  mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), k + 1);
  mpq_class out(num * potential_index_sum(x, k), den);
  out.canonicalize();
  return out;
}

}  // namespace tracedist
