#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>

namespace tracedist {

/// Deletion probability p in [0, 1) and retention probability q = 1 - p.
///
/// When built from a rational, the exact value is kept alongside the binary64 one and
/// enables the exact-arithmetic paths in the channel module.
class CircleParams {
 public:
  static CircleParams from_rational(const mpq_class& p);
  static CircleParams from_double(double p);
  /// "a/b" selects the rational path; anything else is read as a decimal.
  static CircleParams parse(const std::string& text);

  double p() const { return p_; }
  double q() const { return q_; }
  const std::optional<mpq_class>& exact_p() const { return exact_p_; }
  std::optional<mpq_class> exact_q() const;
  bool is_exact() const { return exact_p_.has_value(); }
  /// Text form used in file headers: the canonical rational or the shortest round-trip decimal.
  std::string label() const;

  /// p + q e^{i theta}.
  std::complex<double> point(double theta) const;

 private:
  double p_ = 0.5;
  double q_ = 0.5;
  std::optional<mpq_class> exact_p_;
};

}  // namespace tracedist
