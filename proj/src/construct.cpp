#include "tracedist/construct.hpp"

#include <algorithm>

#include "tracedist/channel.hpp"
#include "tracedist/error.hpp"

namespace tracedist {

namespace {

void check(bool ok, const char* invariant) {
  if (!ok) throw InvariantError(std::string("hard pair invariant failed: ") + invariant);
}

std::size_t hard_pair_degree(unsigned k) {
  std::size_t n = 0, power = 1;
  for (unsigned j = 0; j <= k; ++j, power *= 3) n += power;
  return n;
}

mpz_class power_sum(const IndexSet& s, unsigned j) {
  mpz_class total, term;
  for (std::size_t v : s) {
    mpz_ui_pow_ui(term.get_mpz_t(), v, j);
    total += term;
  }
  return total;
}

}  // namespace

IntPolynomial cyclotomic_R(unsigned k) {
  if (k % 2 == 0 || k > kMaxCyclotomicK) {
    throw InputError("k must be odd with 1 <= k <= " + std::to_string(kMaxCyclotomicK));
  }
  // Each monomial appears once in the expansion, so small ints suffice until the end.
  std::vector<signed char> coeffs{1};
  std::size_t power = 1;
  for (unsigned j = 0; j <= k; ++j, power *= 3) {
    std::vector<signed char> next(coeffs.size() + power, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i] += coeffs[i];
      next[i + power] -= coeffs[i];
    }
    coeffs = std::move(next);
  }
  std::vector<mpz_class> out(coeffs.begin(), coeffs.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial even_powers(std::size_t n) {
  if (n % 2 != 0) throw InputError("even_powers requires even n");
  std::vector<mpz_class> coeffs(n + 1);
  for (std::size_t j = 0; j <= n; j += 2) coeffs[j] = 1;
  return IntPolynomial(std::move(coeffs));
}

HardPairSpec hard_pair(unsigned k, const BitString& prefix) {
  HardPairSpec spec;
  spec.k = k;
  spec.R = cyclotomic_R(k);
  spec.n = hard_pair_degree(k);
  spec.prefix = prefix;
  check(spec.n % 2 == 0, "n is even");
  check(spec.R.degree() == static_cast<long>(spec.n), "deg R = n");

  const IntPolynomial qe = even_powers(spec.n) - spec.R;
  std::vector<std::uint8_t> e_bits(spec.n + 1, 0);
  for (std::size_t i = 0; i < qe.coefficients().size(); ++i) {
    const mpz_class& c = qe.coefficients()[i];
    check(c == 0 || c == 1, "Q_e has 0/1 coefficients");
    e_bits[i] = c == 1 ? 1 : 0;
  }
  check(qe.degree() <= static_cast<long>(spec.n) - 1, "deg Q_e <= n - 1");
  spec.e = BitString(std::move(e_bits));

  spec.x = prefix + BitString::parse("10") + spec.e;
  spec.y = prefix + spec.e + BitString::parse("01");
  const std::size_t m = prefix.size();
  check(spec.x.size() == m + spec.n + 3 && spec.y.size() == spec.x.size(), "|x| = |y| = m + n + 3");
  check(edit_distance(spec.x, spec.y) <= 4, "edit distance <= 4");

  const IntPolynomial identity = -(IntPolynomial{-1, 0, 1} * spec.R).shifted(m);
  check(from_string(spec.x) - from_string(spec.y) == identity,
        "Q_x - Q_y = -w^m (w^2 - 1) R(w)");
  return spec;
}

std::pair<BitString, BitString> intro_pair(std::size_t j) {
  BitString pad;
  for (std::size_t i = 0; i < j; ++i) pad = pad + BitString::parse("01");
  return {pad + BitString::parse("101") + pad, pad + BitString::parse("011") + pad};
}

std::pair<IndexSet, IndexSet> pte_sets(const BitString& x, const BitString& y) {
  auto ones = [](const BitString& s) {
    IndexSet out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i]) out.push_back(i);
    }
    return out;
  };
  return {ones(x), ones(y)};
}

bool verify_pte(const IndexSet& a, const IndexSet& b, unsigned k) {
  if (a.size() != b.size()) return false;
  for (unsigned j = 1; j <= k; ++j) {
    if (power_sum(a, j) != power_sum(b, j)) return false;
  }
  return true;
}

int pte_degree(const BitString& x, const BitString& y) {
  if (x == y) throw InputError("strings must differ");
  const IntPolynomial f = from_string(x) - from_string(y);
  if (f.is_zero()) throw InputError("strings must differ");  // differ only by trailing zeros
  return static_cast<int>(multiplicity_at_one(f).k) - 1;
}

int pte_degree_by_power_sums(const BitString& x, const BitString& y) {
  const auto [a, b] = pte_sets(x, y);
  if (a == b) throw InputError("index sets must differ");
  if (a.size() != b.size()) return -1;
  // Distinct s-element sets cannot agree on power sums 1..s.
  int degree = 0;
  while (static_cast<std::size_t>(degree) < a.size() &&
         power_sum(a, degree + 1) == power_sum(b, degree + 1)) {
    ++degree;
  }
  return degree;
}

PairAnalysis analyze_pair(const BitString& x, const BitString& y, const CircleParams& c,
                          const SupremumOptions& options) {
  if (x.size() != y.size()) throw InputError("unequal lengths");
  if (x == y) throw InputError("strings must differ");

  PairAnalysis out;
  out.x = x;
  out.y = y;
  out.channel = c;
  out.n = x.size();
  out.hamming = hamming_distance(x, y);
  out.edit = edit_distance(x, y);
  out.weight_difference = static_cast<long>(x.weight()) - static_cast<long>(y.weight());
  out.trivially_distinguishable = out.weight_difference != 0;

  out.difference = from_string(x) - from_string(y);
  const MultiplicityResult mult = multiplicity_at_one(out.difference);
  out.multiplicity = mult.k;
  out.sign_changes = sign_changes(out.difference);
  if (w_minus_one_power(mult.k) * mult.quotient != out.difference) {
    throw InvariantError("(w - 1)^k g does not reproduce Q_x - Q_y");
  }
  out.quotient_mass = coefficient_mass(mult.quotient);
  const auto deg = static_cast<unsigned long>(out.difference.degree());
  if (mult.k >= 1) out.quotient_mass_bound = quotient_mass_bound(deg, mult.k);

  std::tie(out.ones_x, out.ones_y) = pte_sets(x, y);
  out.pte_degree = static_cast<int>(mult.k) - 1;
  if (pte_degree_by_power_sums(x, y) != out.pte_degree) {
    throw InvariantError("PTE degree from multiplicity disagrees with power sums");
  }

  out.supremum = circle_supremum(out.difference, c, options);
  // A degree-0 difference has k = 0, where the bound is 1/2 for every n.
  out.sup_lower_bound = mult_to_sup_lower_bound(std::max(deg, 1ul), mult.k);
  out.l1_separation = profile_l1_separation(x, y, c);
  if (!out.trivially_distinguishable) out.blocks = block_decompose(x, y, out.n);
  return out;
}

}  // namespace tracedist
