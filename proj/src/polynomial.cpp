#include "tracedist/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tracedist/error.hpp"
#include "tracedist/numeric.hpp"

namespace tracedist {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t power, long c) {
  std::vector<mpz_class> coeffs(power + 1);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long IntPolynomial::degree() const {
  return coeffs_.empty() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1;
}

mpz_class IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPolynomial::value_at_one() const {
  mpz_class sum;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> w) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * w + to_double(*it);
  return acc;
}

mpz_class IntPolynomial::derivative_mass() const {
  mpz_class sum;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) sum += abs(coeffs_[k]) * static_cast<unsigned long>(k);
  return sum;
}

IntPolynomial IntPolynomial::divide_by_w_minus_one(mpz_class& remainder) const {
  if (coeffs_.empty()) {
    remainder = 0;
    return {};
  }
  // b_{n-1} = a_n, b_{j-1} = a_j + b_j; remainder a_0 + b_0 = f(1).
  const std::size_t n = coeffs_.size() - 1;
  std::vector<mpz_class> quot(n);
  mpz_class carry = coeffs_[n];
  for (std::size_t j = n; j-- > 0;) {
    quot[j] = carry;
    carry += coeffs_[j];
  }
  remainder = carry;
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::shifted(std::size_t power) const {
  if (coeffs_.empty()) return {};
  std::vector<mpz_class> coeffs(power);
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator-(const IntPolynomial& f) {
  IntPolynomial out = f;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<mpz_class> prod(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] != 0) prod[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(prod));
}

IntPolynomial from_string(const BitString& x) {
  std::vector<mpz_class> coeffs(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) coeffs[i] = x[i];
  return IntPolynomial(std::move(coeffs));
}

MultiplicityResult multiplicity_at_one(const IntPolynomial& f) {
  if (f.is_zero()) throw InputError("multiplicity undefined for the zero polynomial");
  MultiplicityResult out{0, f};
  while (out.quotient.value_at_one() == 0) {
    mpz_class rem;
    out.quotient = out.quotient.divide_by_w_minus_one(rem);
    ++out.k;
  }
  return out;
}

IntPolynomial w_minus_one_power(unsigned k) {
  std::vector<mpz_class> coeffs(k + 1);
  for (unsigned j = 0; j <= k; ++j) {
    coeffs[j] = binomial(k, j);
    if ((k - j) % 2 == 1) coeffs[j] = -coeffs[j];
  }
  return IntPolynomial(std::move(coeffs));
}

unsigned sign_changes(const IntPolynomial& f) {
  if (f.is_zero()) throw InputError("sign changes undefined for the zero polynomial");
  unsigned changes = 0;
  int last_sign = 0;
  for (const auto& c : f.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

Norms norms(const IntPolynomial& f) {
  mpz_class l1, sq;
  for (const auto& c : f.coefficients()) {
    l1 += abs(c);
    sq += c * c;
  }
  return {to_double(l1), std::sqrt(to_double(sq))};
}

mpq_class mult_to_sup_lower_bound(unsigned long n, unsigned k) {
  if (n == 0) throw InputError("mult_to_sup_lower_bound requires n >= 1");
  mpz_class base;
  mpz_ui_pow_ui(base.get_mpz_t(), n, k + 2);
  base *= 4;
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), base.get_mpz_t(), k);
  denom *= 2;
  return mpq_class(mpz_class(1), denom);
}

double quotient_mass_bound(unsigned long n, unsigned k) {
  if (k < 1 || k > n) throw InputError("quotient_mass_bound requires 1 <= k <= n");
  const double nd = static_cast<double>(n);
  return (nd + 1.0) * std::pow(std::numbers::e * nd / k, static_cast<double>(k));
}

mpz_class coefficient_mass(const IntPolynomial& f) {
  mpz_class sum;
  for (const auto& c : f.coefficients()) sum += abs(c);
  return sum;
}

}  // namespace tracedist
