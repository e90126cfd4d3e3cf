#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "tracedist/bitstring.hpp"

namespace tracedist {

/// Dense polynomial with exact integer coefficients, a_0 first. Trailing zeros are always
/// trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// c * w^power.
  static IntPolynomial monomial(std::size_t power, long c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const;
  /// Coefficient of w^i; zero beyond the degree.
  mpz_class coefficient(std::size_t i) const;
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  /// Value at w = 1, exactly.
  mpz_class value_at_one() const;
  /// Horner evaluation in binary64.
  std::complex<double> evaluate(std::complex<double> w) const;

  /// Sum of k |a_k|, the mass bounding |f'| on the closed unit disk.
  mpz_class derivative_mass() const;

  /// Quotient by (w - 1) via synthetic division; `remainder` receives f(1).
  IntPolynomial divide_by_w_minus_one(mpz_class& remainder) const;
  /// f * w^power.
  IntPolynomial shifted(std::size_t power) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator-(const IntPolynomial& f);
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Q_x(w) = x_0 + x_1 w + ... + x_{n-1} w^{n-1}.
IntPolynomial from_string(const BitString& x);

struct MultiplicityResult {
  unsigned k = 0;        // multiplicity of the root w = 1
  IntPolynomial quotient;  // g with f = (w - 1)^k g and g(1) != 0
};

/// Throws InputError("multiplicity undefined") for the zero polynomial.
MultiplicityResult multiplicity_at_one(const IntPolynomial& f);

/// (w - 1)^k, expanded.
IntPolynomial w_minus_one_power(unsigned k);

/// Descartes count: pairs i < j with a_i a_j < 0 and only zeros strictly between.
/// Throws InputError for the zero polynomial.
unsigned sign_changes(const IntPolynomial& f);

struct Norms {
  double l1 = 0.0;
  double l2 = 0.0;
};

Norms norms(const IntPolynomial& f);

/// (1/2) (4 n^{k+2})^{-k}: the guaranteed circle supremum for a {-1,0,1} polynomial of
/// degree n whose root at 1 has multiplicity at most k. Throws InputError for n = 0.
mpq_class mult_to_sup_lower_bound(unsigned long n, unsigned k);

/// (n + 1)(e n / k)^k, bounding the coefficient mass of f / (w - 1)^k for |a_j| <= 1.
/// Requires 1 <= k <= n.
double quotient_mass_bound(unsigned long n, unsigned k);

/// Sum of |b_j|.
mpz_class coefficient_mass(const IntPolynomial& f);

}  // namespace tracedist
