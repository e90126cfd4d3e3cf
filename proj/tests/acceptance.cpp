// Acceptance checks A1..A10. Usage: acceptance [A1 ... A10]; no arguments runs all.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "tracedist/channel.hpp"
#include "tracedist/construct.hpp"
#include "tracedist/distinguish.hpp"
#include "tracedist/numeric.hpp"
#include "tracedist/polynomial.hpp"
#include "tracedist/strings.hpp"
#include "tracedist/supremum.hpp"

using namespace tracedist;
using tracedist::testing::bits_of;
using tracedist::testing::random_bits;

namespace {

const CircleParams kHalf = CircleParams::from_rational(mpq_class(1, 2));
const CircleParams kUnit = CircleParams::from_rational(mpq_class(0));

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::size_t depth_n(unsigned k) { return (static_cast<std::size_t>(std::pow(3, k + 1)) - 1) / 2; }

// Coefficients of prod_{j<=k} (1 - w^{3^j}) by signed subset sums.
std::vector<long> r_by_subsets(unsigned k) {
  std::vector<long> c(depth_n(k) + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << (k + 1)); ++mask) {
    std::size_t e = 0, power = 1;
    long sign = 1;
    for (unsigned j = 0; j <= k; ++j, power *= 3) {
      if (mask >> j & 1u) {
        e += power;
        sign = -sign;
      }
    }
    c[e] += sign;
  }
  return c;
}

Outcome a1() {
  std::mt19937_64 rng(1001);
  int checked = 0;
  for (unsigned k : {1u, 3u, 5u}) {
    const std::vector<long> r = r_by_subsets(k);
    for (const BitString& a : {BitString{}, random_bits(rng, depth_n(k))}) {
      const HardPairSpec hp = hard_pair(k, a);
      // expected = -w^{|a|} (w^2 - 1) R = w^{|a|} (R - w^2 R)
      std::vector<long> expected(a.size() + r.size() + 2, 0);
      for (std::size_t i = 0; i < r.size(); ++i) {
        expected[a.size() + i] += r[i];
        expected[a.size() + i + 2] -= r[i];
      }
      if (hp.x.size() != hp.y.size() || hp.x.size() > expected.size()) return {false, "length mismatch"};
      for (std::size_t i = 0; i < expected.size(); ++i) {
        const long got = i < hp.x.size() ? long{hp.x[i]} - long{hp.y[i]} : 0;
        if (got != expected[i]) return {false, fmt("k=%u |a|=%zu coefficient %zu", k, a.size(), i)};
      }
      ++checked;
    }
  }
  const HardPairSpec hp1 = hard_pair(1);
  if (hp1.x.to_string() != "1001110" || hp1.y.to_string() != "0111001") {
    return {false, "k=1 strings " + hp1.x.to_string() + " " + hp1.y.to_string()};
  }
  return {true, fmt("%d pairs, exact identity; k=1 x=1001110 y=0111001", checked)};
}

Outcome a2() {
  std::mt19937_64 rng(1001);
  for (unsigned k : {1u, 3u, 5u}) {
    for (const BitString& a : {BitString{}, random_bits(rng, depth_n(k))}) {
      const HardPairSpec hp = hard_pair(k, a);
      const unsigned m = multiplicity_at_one(from_string(hp.x) - from_string(hp.y)).k;
      const int t = pte_degree(hp.x, hp.y);
      const int t2 = pte_degree_by_power_sums(hp.x, hp.y);
      if (m != k + 2 || t != static_cast<int>(k + 1) || t2 != t) {
        return {false, fmt("k=%u |a|=%zu: multiplicity %u, pte %d / %d", k, a.size(), m, t, t2)};
      }
    }
  }
  const HardPairSpec hp = hard_pair(1);
  const auto [dx, dy] = pte_sets(hp.x, hp.y);
  if (dx != IndexSet{0, 3, 4, 5} || dy != IndexSet{1, 2, 3, 6}) return {false, "k=1 index sets"};
  long sums[4][2] = {};
  for (int e = 1; e <= 3; ++e) {
    for (auto i : dx) sums[e][0] += static_cast<long>(std::pow(i, e));
    for (auto i : dy) sums[e][1] += static_cast<long>(std::pow(i, e));
  }
  const bool ok = sums[1][0] == 12 && sums[1][1] == 12 && sums[2][0] == 50 && sums[2][1] == 50 &&
                  sums[3][0] == 216 && sums[3][1] == 252;
  return {ok, fmt("multiplicity k+2, pte k+1 for k=1,3,5; power sums %ld=%ld %ld=%ld %ld!=%ld", sums[1][0],
                  sums[1][1], sums[2][0], sums[2][1], sums[3][0], sums[3][1])};
}

double sup_ratio(unsigned k, const SupremumOptions& opt, double* hard_upper, double* intro_lower) {
  const HardPairSpec hp = hard_pair(k, BitString::zeros(depth_n(k)));
  const auto [ix, iy] = intro_pair((hp.x.size() - 3) / 4);
  const auto hard = circle_supremum(from_string(hp.x) - from_string(hp.y), kHalf, opt);
  const auto easy = circle_supremum(from_string(ix) - from_string(iy), kHalf, opt);
  *hard_upper = hard.upper;
  *intro_lower = easy.lower;
  return easy.lower / hard.upper;
}

Outcome a3() {
  SupremumOptions opt;
  opt.grid = 1'000'000;
  double hu = 0, il = 0;
  const double ratio = sup_ratio(3, opt, &hu, &il);
  std::string detail = fmt("length 83: hard upper %.6g, intro lower %.6g, factor %.4f (need >= 10)", hu, il, ratio);
  double hu5 = 0, il5 = 0;
  const double ratio5 = sup_ratio(5, opt, &hu5, &il5);
  detail += fmt("; info k=5 length 731 factor %.4f", ratio5);
  return {ratio >= 10.0, detail};
}

Outcome a4() {
  std::mt19937_64 rng(1004);
  int violations = 0, tested = 0;
  while (tested < 10000) {
    std::vector<mpz_class> c(1 + rng() % 31);
    for (auto& a : c) a = static_cast<long>(rng() % 3) - 1;
    const IntPolynomial f(std::move(c));
    if (f.is_zero()) continue;
    if (multiplicity_at_one(f).k > sign_changes(f)) ++violations;
    ++tested;
  }
  return {violations == 0, fmt("%d polynomials, %d violations", tested, violations)};
}

Outcome a5() {
  std::mt19937_64 rng(1005);
  const std::size_t n = 32;
  const double q = kHalf.q();
  int violations = 0, tested = 0;
  while (tested < 100) {
    const BitString x = random_bits(rng, n), y = random_bits(rng, n);
    if (x == y) continue;
    ++tested;
    const IntPolynomial f = from_string(x) - from_string(y);
    const double sep = profile_l1_separation(x, y, kHalf);
    const auto cert = circle_supremum(f, kHalf);
    if (sep / std::sqrt(n + 1.0) > q * cert.upper * (1 + 1e-12)) ++violations;
    if (q * cert.lower > sep * (1 + 1e-12)) ++violations;
    const Norms nm = norms(f);
    const auto unit = circle_supremum(f, kUnit);
    const double deg = static_cast<double>(f.degree());
    if (nm.l1 / std::sqrt(deg + 1) > nm.l2 * (1 + 1e-12)) ++violations;
    if (nm.l2 > unit.upper * (1 + 1e-12)) ++violations;
    if (unit.lower > nm.l1 * (1 + 1e-12)) ++violations;
  }
  return {violations == 0, fmt("%d pairs, %d violations", tested, violations)};
}

Outcome a6() {
  std::mt19937_64 rng(1006);
  const BitString x = random_bits(rng, 16);
  const auto est = simulate_mean_profile(x, kHalf, 1006, 200000);
  const auto exact = exact_mean_profile(x, kHalf);
  double worst = 0;
  for (std::size_t j = 0; j < 16; ++j) worst = std::max(worst, std::fabs(est.values[j] - exact.values[j]));
  return {worst <= 0.01, fmt("x=%s max |E_hat - E| = %.5f (tolerance 0.01)", x.to_string().c_str(), worst)};
}

Outcome a7() {
  std::mt19937_64 rng(1007);
  const std::size_t n = 12;
  int correct = 0;
  for (int pair = 0; pair < 50; ++pair) {
    const BitString x = random_bits(rng, n);
    BitString y = x.flipped(rng() % n);
    if (rng() % 2) {
      std::size_t j = rng() % n;
      if (y.flipped(j) != x) y = y.flipped(j);
    }
    const bool truth_is_x = pair % 2 == 0;
    const auto prof = simulate_mean_profile(truth_is_x ? x : y, kHalf, 7000 + pair, 1'000'000);
    const Decision d = potential_distinguish(prof, x, y, kHalf);
    if ((d.choice == Hypothesis::X) == truth_is_x) ++correct;
  }

  // Exhaustive exact gap, with expectations taken from exact channel profiles.
  long pairs = 0, violations = 0;
  for (std::size_t len = 1; len <= 10; ++len) {
    const std::size_t count = std::size_t{1} << len;
    std::vector<std::vector<mpq_class>> phi(count, std::vector<mpq_class>(3));
    for (std::size_t m = 0; m < count; ++m) {
      const auto e = exact_mean_profile_rational(bits_of(m, len), mpq_class(1, 2));
      for (unsigned k = 0; k < 3; ++k) {
        for (std::size_t j = k; j < len; ++j) phi[m][k] += mpq_class(binomial(j, k)) * e[j];
      }
    }
    for (std::size_t mx = 0; mx < count; ++mx) {
      for (std::size_t my = 0; my < count; ++my) {
        const int d = __builtin_popcountll(mx ^ my);
        if (d == 0 || d > 3) continue;
        ++pairs;
        bool found = false;
        mpq_class qk(1, 2);
        for (int k = 0; k < d && !found; ++k, qk /= 2) found = abs(phi[mx][k] - phi[my][k]) >= qk;
        if (!found) ++violations;
      }
    }
  }
  return {correct >= 48 && violations == 0,
          fmt("%d/50 correct (need >= 48); exact gap over %ld pairs, %ld violations", correct, pairs, violations)};
}

Outcome a8() {
  constexpr double kPi = std::numbers::pi;
  long points = 0, violations = 0;
  for (int d = 1; d <= 50; ++d) {
    for (int i = 1; i <= 200; ++i) {
      const double phi = -kPi / (3.0 * d) + (2 * kPi / (3.0 * d)) * i / 201.0;
      if (std::cos(d * phi) > std::pow(std::cos(phi), d) + 1e-12) ++violations;
      const double theta = -2 * kPi / (3.0 * d) + (4 * kPi / (3.0 * d)) * i / 201.0;
      const std::complex<double> w = (1.0 + std::polar(1.0, theta)) / 2.0;
      if (std::abs(std::pow(w, d) - 1.0) > 2 * std::fabs(std::sin(d * theta / 4)) + 1e-12) ++violations;
      ++points;
    }
  }
  return {violations == 0, fmt("%ld grid points per inequality, %ld violations", points, violations)};
}

Outcome a9() {
  long pairs = 0, failures = 0;
  unsigned worst = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const std::size_t count = std::size_t{1} << n;
    std::vector<BitString> all;
    for (std::size_t m = 0; m < count; ++m) all.push_back(bits_of(m, n));
    for (std::size_t mx = 0; mx < count; ++mx) {
      for (std::size_t my = 0; my < count; ++my) {
        if (mx == my || __builtin_popcountll(mx) != __builtin_popcountll(my)) continue;
        if (edit_distance(all[mx], all[my]) != 2) continue;
        ++pairs;
        const unsigned m = multiplicity_at_one(from_string(all[mx]) - from_string(all[my])).k;
        worst = std::max(worst, m);
        if (!block_decompose(all[mx], all[my], 3) || m > 9) ++failures;
      }
    }
  }
  return {failures == 0, fmt("%ld pairs, %ld failures, max multiplicity %u", pairs, failures, worst)};
}

Outcome a10() {
  std::mt19937_64 rng(1010);
  int tested = 0, violations = 0;
  while (tested < 100) {
    const std::size_t n = 1 + rng() % 20;
    const BitString x = random_bits(rng, n), y = random_bits(rng, n);
    if (x == y) continue;
    ++tested;
    const IntPolynomial f = from_string(x) - from_string(y);
    const unsigned k = multiplicity_at_one(f).k;
    const auto deg = static_cast<unsigned long>(std::max(f.degree(), 1L));
    const mpq_class bound = mult_to_sup_lower_bound(deg, k);
    if (mpq_class(circle_supremum(f, kHalf).lower) < bound) ++violations;
  }
  return {violations == 0, fmt("%d pairs, %d violations", tested, violations)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, std::function<Outcome()>> criteria = {
      {"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4}, {"A5", a5},
      {"A6", a6}, {"A7", a7}, {"A8", a8}, {"A9", a9}, {"A10", a10},
  };
  std::vector<std::string> ids(argv + 1, argv + argc);
  if (ids.empty()) ids = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"};

  int failed = 0;
  for (const auto& id : ids) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::fprintf(stderr, "unknown criterion %s\n", id.c_str());
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
