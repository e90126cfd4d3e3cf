#include "tracedist/numeric.hpp"

#include <cmath>
#include <limits>

#include "tracedist/error.hpp"

namespace tracedist {

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpq_class parse_rational(const std::string& text) {
  mpq_class out;
  if (text.empty() || mpq_set_str(out.get_mpq_t(), text.c_str(), 10) != 0) {
    throw InputError("not a rational number: '" + text + "'");
  }
  if (out.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
  out.canonicalize();
  return out;
}

double to_double(const mpz_class& value) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
  if (exp > std::numeric_limits<double>::max_exponent) {
    return mant < 0 ? -std::numeric_limits<double>::infinity()
                    : std::numeric_limits<double>::infinity();
  }
  return std::ldexp(mant, static_cast<int>(exp));
}

double to_double(const mpq_class& value) {
  if (value == 0) return 0.0;
  // Scale so |quotient| lies in [2^60, 2^62), force the last bit odd when inexact, and let
  // the int64 -> double conversion perform the single round-to-nearest.
  const long num_bits = static_cast<long>(mpz_sizeinbase(value.get_num().get_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(value.get_den().get_mpz_t(), 2));
  const long shift = 61 - (num_bits - den_bits);
  mpz_class num = abs(value.get_num());
  mpz_class den = value.get_den();
  if (shift > 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  mpz_class quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) quot |= 1;
  const auto bits = static_cast<std::int64_t>(mpz_get_si(quot.get_mpz_t()));
  const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
  return value < 0 ? -magnitude : magnitude;
}

void CompensatedSum::add(double value) {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    correction_ += (sum_ - t) + value;
  } else {
    correction_ += (value - t) + sum_;
  }
  sum_ = t;
}

}  // namespace tracedist
