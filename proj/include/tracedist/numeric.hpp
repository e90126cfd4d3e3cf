#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tracedist {

/// Exact C(n, k); zero when k > n.
mpz_class binomial(std::uint64_t n, std::uint64_t k);

/// Parses "a/b" or an integer into a canonical rational. Throws InputError.
mpq_class parse_rational(const std::string& text);

/// Nearest binary64 value of an exact rational (round-to-nearest, unlike mpq_get_d).
double to_double(const mpq_class& value);

/// Binary64 value of an exact integer, finite or +/-inf on overflow.
double to_double(const mpz_class& value);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double value);
  double value() const { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

}  // namespace tracedist
