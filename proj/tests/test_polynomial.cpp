#include "tracedist/polynomial.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support.hpp"
#include "tracedist/error.hpp"
#include "tracedist/numeric.hpp"

using namespace tracedist;
using tracedist::testing::random_bits;

namespace {

IntPolynomial random_ternary(std::mt19937_64& rng, std::size_t max_degree) {
  std::vector<mpz_class> c(1 + rng() % (max_degree + 1));
  for (auto& a : c) a = static_cast<long>(rng() % 3) - 1;
  return IntPolynomial(std::move(c));
}

// Smallest m with f^{(m)}(1) != 0, from falling-factorial sums.
unsigned multiplicity_by_derivatives(const IntPolynomial& f) {
  const auto& a = f.coefficients();
  for (unsigned m = 0;; ++m) {
    mpz_class sum = 0;
    for (std::size_t j = m; j < a.size(); ++j) {
      mpz_class falling = 1;
      for (unsigned t = 0; t < m; ++t) falling *= static_cast<unsigned long>(j - t);
      sum += a[j] * falling;
    }
    if (sum != 0) return m;
  }
}

}  // namespace

TEST(from_string, examples) {
  EXPECT_EQ(from_string(BitString::parse("101")), (IntPolynomial{1, 0, 1}));
  EXPECT_EQ(from_string(BitString::parse("0010")), (IntPolynomial{0, 0, 1}));
  EXPECT_TRUE(from_string(BitString::parse("000")).is_zero());
  EXPECT_EQ(from_string(BitString::parse("000")).degree(), IntPolynomial::kZeroDegree);
}

TEST(from_string, linear_and_value_at_one_is_weight) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const BitString x = random_bits(rng, n), y = random_bits(rng, n);
    const IntPolynomial d = from_string(x) - from_string(y);
    EXPECT_EQ(d.value_at_one(), mpz_class(static_cast<long>(x.weight()) - static_cast<long>(y.weight())));
    EXPECT_LE(d.degree(), static_cast<long>(n) - 1);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(d.coefficient(i), mpz_class(static_cast<int>(x[i]) - static_cast<int>(y[i])));
    }
  }
}

TEST(multiplicity_at_one, examples) {
  EXPECT_EQ(multiplicity_at_one(IntPolynomial{-1, 1}).k, 1u);
  EXPECT_EQ(multiplicity_at_one(IntPolynomial{1, -2, 1}).k, 2u);
  EXPECT_EQ(multiplicity_at_one(IntPolynomial{1, 1}).k, 0u);
  const auto r = multiplicity_at_one(IntPolynomial{1, -1, 0, -1, 1});
  EXPECT_EQ(r.k, 2u);
  EXPECT_EQ(r.quotient, (IntPolynomial{1, 1, 1}));
}

TEST(multiplicity_at_one, zero_polynomial) {
  try {
    multiplicity_at_one(IntPolynomial{});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("multiplicity undefined"), std::string::npos);
  }
}

TEST(multiplicity_at_one, agrees_with_derivatives_and_reconstructs) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 2000; ++trial) {
    IntPolynomial f = random_ternary(rng, 30);
    // Plant extra roots at 1 on half the samples.
    if (trial % 2 == 0) f = f * w_minus_one_power(static_cast<unsigned>(rng() % 5));
    if (f.is_zero()) continue;
    const auto r = multiplicity_at_one(f);
    EXPECT_EQ(r.k, multiplicity_by_derivatives(f));
    EXPECT_EQ(w_minus_one_power(r.k) * r.quotient, f);
    EXPECT_NE(r.quotient.value_at_one(), 0);
  }
}

TEST(divide_by_w_minus_one, remainder_is_value_at_one) {
  mpz_class rem;
  const IntPolynomial q = IntPolynomial{3, 0, 2}.divide_by_w_minus_one(rem);
  EXPECT_EQ(rem, 5);
  EXPECT_EQ(q * IntPolynomial({-1, 1}) + IntPolynomial{5}, (IntPolynomial{3, 0, 2}));
}

TEST(sign_changes, examples) {
  EXPECT_EQ(sign_changes(IntPolynomial{1, -1}), 1u);
  EXPECT_EQ(sign_changes(IntPolynomial{1, 0, 0, -1, 1}), 2u);
  EXPECT_EQ(sign_changes(IntPolynomial{1, 1, 1}), 0u);
  EXPECT_THROW(sign_changes(IntPolynomial{}), InputError);
}

TEST(sign_changes, bounds_multiplicity_at_one) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 3000; ++trial) {
    const IntPolynomial f = random_ternary(rng, 30);
    if (f.is_zero()) continue;
    EXPECT_LE(multiplicity_at_one(f).k, sign_changes(f));
  }
}

TEST(norms, examples) {
  const Norms n = norms(IntPolynomial{1, -1, 0, 1});
  EXPECT_DOUBLE_EQ(n.l1, 3.0);
  EXPECT_DOUBLE_EQ(n.l2, std::sqrt(3.0));
}

TEST(mult_to_sup_lower_bound, examples) {
  EXPECT_EQ(mult_to_sup_lower_bound(5, 0), mpq_class(1, 2));
  EXPECT_EQ(mult_to_sup_lower_bound(4, 1), mpq_class(1, 512));
  mpz_class denom = 31104;
  denom = 2 * denom * denom * denom;
  EXPECT_EQ(mult_to_sup_lower_bound(6, 3), mpq_class(mpz_class(1), denom));
  EXPECT_THROW(mult_to_sup_lower_bound(0, 1), InputError);
}

TEST(quotient_mass_bound, examples) {
  EXPECT_NEAR(quotient_mass_bound(1, 1), 2 * std::numbers::e, 1e-12);
  EXPECT_NEAR(quotient_mass_bound(4, 2), 20 * std::numbers::e * std::numbers::e, 1e-12);
  EXPECT_THROW(quotient_mass_bound(3, 0), InputError);
  EXPECT_THROW(quotient_mass_bound(3, 4), InputError);
}

TEST(quotient_mass_bound, holds_for_string_differences) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 2 + rng() % 24;
    const BitString x = random_bits(rng, n);
    BitString y = random_bits(rng, n);
    if (x == y) continue;
    const IntPolynomial f = from_string(x) - from_string(y);
    const auto r = multiplicity_at_one(f);
    if (r.k == 0) continue;
    const auto deg = static_cast<unsigned long>(f.degree());
    EXPECT_LE(to_double(coefficient_mass(r.quotient)), quotient_mass_bound(deg, r.k) * (1 + 1e-12));
  }
}

TEST(numeric, to_double_rounds_to_nearest) {
  EXPECT_EQ(to_double(mpq_class(1, 3)), 1.0 / 3.0);
  EXPECT_EQ(to_double(mpq_class(2, 3)), 2.0 / 3.0);
  EXPECT_EQ(to_double(mpq_class(-7, 10)), -0.7);
  EXPECT_EQ(to_double(mpq_class(1, 1 << 20)), std::ldexp(1.0, -20));
  EXPECT_EQ(to_double(mpq_class(1, 10)), 0.1);
}

// The result is at least as close to the exact value as both binary64 neighbours.
TEST(numeric, to_double_is_nearest_for_random_rationals) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 5000; ++trial) {
    mpz_class num = rng(), den = rng() | 1;
    num <<= rng() % 200;
    den <<= rng() % 200;
    if (trial % 2) num = -num;
    const mpq_class r(num, den);
    const double d = to_double(r);
    const mpq_class err = abs(mpq_class(d) - r);
    EXPECT_LE(err, abs(mpq_class(std::nextafter(d, HUGE_VAL)) - r));
    EXPECT_LE(err, abs(mpq_class(std::nextafter(d, -HUGE_VAL)) - r));
  }
}

TEST(numeric, integer_to_double) {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 2000);
  EXPECT_EQ(to_double(big), HUGE_VAL);
  EXPECT_EQ(to_double(mpz_class(-12345)), -12345.0);
}

TEST(numeric, binomial_and_parse_rational) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 10), 0);
  EXPECT_EQ(parse_rational("2/4"), mpq_class(1, 2));
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("x"), InputError);
}
