#pragma once

#include <cstdint>

namespace tracedist {

/// Stateless counter-based generator: every draw is a pure function of
/// (seed, stream, counter), so traces can be produced in any order or in parallel.
///
/// The stream key is a SplitMix64 hash of (seed, stream); counter values are then the
/// positions of the SplitMix64 sequence started at that key.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix(mix(seed) ^ stream)) {}

  std::uint64_t bits(std::uint64_t counter) const {
    return finalize(key_ + (counter + 1) * kGamma);
  }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  static std::uint64_t mix(std::uint64_t z) { return finalize(z + kGamma); }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
};

}  // namespace tracedist
