#include "tracedist/circle.hpp"

#include <charconv>
#include <cmath>

#include "tracedist/error.hpp"
#include "tracedist/numeric.hpp"

namespace tracedist {

CircleParams CircleParams::from_rational(const mpq_class& p) {
  if (p < 0 || p >= 1) throw InputError("deletion probability must lie in [0, 1)");
  CircleParams c;
  c.exact_p_ = p;
  c.p_ = to_double(p);
  c.q_ = to_double(mpq_class(1 - p));
  return c;
}

CircleParams CircleParams::from_double(double p) {
  if (!(p >= 0.0 && p < 1.0)) throw InputError("deletion probability must lie in [0, 1)");
  CircleParams c;
  c.p_ = p;
  c.q_ = 1.0 - p;
  return c;
}

CircleParams CircleParams::parse(const std::string& text) {
  if (text.find('/') != std::string::npos) return from_rational(parse_rational(text));
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw InputError("not a probability: '" + text + "'");
  return from_double(value);
}

std::optional<mpq_class> CircleParams::exact_q() const {
  if (!exact_p_) return std::nullopt;
  return mpq_class(1 - *exact_p_);
}

std::string CircleParams::label() const {
  if (exact_p_) return exact_p_->get_str();
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p_);
  return std::string(buf, ptr);
}

std::complex<double> CircleParams::point(double theta) const {
  return {p_ + q_ * std::cos(theta), q_ * std::sin(theta)};
}

}  // namespace tracedist
