#pragma once

#include <cstdint>
#include <random>

#include "tracedist/bitstring.hpp"

namespace tracedist::testing {

inline BitString random_bits(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1u);
  return BitString(std::move(bits));
}

inline BitString bits_of(std::uint64_t mask, std::size_t n) {
  std::vector<std::uint8_t> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
  return BitString(std::move(bits));
}

}  // namespace tracedist::testing
