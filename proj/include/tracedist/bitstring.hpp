#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tracedist {

/// A finite string over {0,1}, indexed from 0.
class BitString {
 public:
  BitString() = default;
  /// Throws InputError if any entry is not 0 or 1.
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses ASCII '0'/'1' text. A single trailing newline is tolerated.
  static BitString parse(std::string_view text);
  static BitString zeros(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }

  /// Number of ones.
  std::size_t weight() const;
  std::string to_string() const;
  BitString substr(std::size_t pos, std::size_t len) const;
  /// Copy with bit i inverted.
  BitString flipped(std::size_t i) const;

  void push_back(std::uint8_t bit);

  friend BitString operator+(const BitString& lhs, const BitString& rhs);
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

std::ostream& operator<<(std::ostream& os, const BitString& s);

}  // namespace tracedist
