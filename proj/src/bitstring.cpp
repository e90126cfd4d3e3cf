#include "tracedist/bitstring.hpp"

#include <algorithm>
#include <ostream>

#include "tracedist/error.hpp"

namespace tracedist {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw InputError("bit string entries must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw InputError("bit string may contain only '0' and '1', got '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  BitString out;
  out.bits_ = std::move(bits);
  return out;
}

BitString BitString::zeros(std::size_t n) {
  BitString out;
  out.bits_.assign(n, 0);
  return out;
}

std::size_t BitString::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitString::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
  return out;
}

BitString BitString::substr(std::size_t pos, std::size_t len) const {
  if (pos > bits_.size()) throw InputError("substr position out of range");
  len = std::min(len, bits_.size() - pos);
  BitString out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                   bits_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return out;
}

BitString BitString::flipped(std::size_t i) const {
  if (i >= bits_.size()) throw InputError("flip index out of range");
  BitString out = *this;
  out.bits_[i] ^= 1u;
  return out;
}

void BitString::push_back(std::uint8_t bit) {
  if (bit > 1) throw InputError("bit must be 0 or 1");
  bits_.push_back(bit);
}

BitString operator+(const BitString& lhs, const BitString& rhs) {
  BitString out = lhs;
  out.bits_.insert(out.bits_.end(), rhs.bits_.begin(), rhs.bits_.end());
  return out;
}

std::ostream& operator<<(std::ostream& os, const BitString& s) { return os << s.to_string(); }

}  // namespace tracedist
