#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tracedist/bitstring.hpp"

namespace tracedist {

/// Number of positions where x and y differ. Throws InputError on unequal lengths.
std::size_t hamming_distance(const BitString& x, const BitString& y);

/// Insertion/deletion edit distance, |x| + |y| - 2 LCS(x, y).
std::size_t edit_distance(const BitString& x, const BitString& y);

/// The five aligned block shapes. Numeric values are the conventional case labels.
///
///   Identical     x_i = y_i
///   ShiftedLeft   x_i = a s,  y_i = s b
///   ShiftedRight  x_i = s a,  y_i = b s
///   HeadMismatch  x_i = a s,  y_i = b s   (a != b)
///   TailMismatch  x_i = s a,  y_i = s b   (a != b)
enum class BlockCase : int {
  Identical = 1,
  ShiftedLeft = 2,
  ShiftedRight = 3,
  HeadMismatch = 4,
  TailMismatch = 5,
};

constexpr int case_label(BlockCase c) { return static_cast<int>(c); }

struct Block {
  std::size_t start = 0;   // t_i
  std::size_t length = 0;  // l_i > 0
  BlockCase kind = BlockCase::Identical;
  std::optional<std::uint8_t> a;  // x-side lone bit, absent for Identical
  std::optional<std::uint8_t> b;  // y-side lone bit, absent for Identical
  BitString shared;               // s_i, or the whole segment for Identical
};

struct BlockDecomposition {
  std::vector<Block> blocks;

  std::size_t size() const { return blocks.size(); }
};

/// True iff the aligned segments x[start, start+len) and y[start, start+len) fit `kind`.
bool block_matches(const BitString& x, const BitString& y, std::size_t start, std::size_t len,
                   BlockCase kind);

/// Minimum-block decomposition of (x, y) into at most d_max blocks, or nullopt.
///
/// Among decompositions with the minimum count, blocks are compared left to right by
/// case label (lowest first), then by length (longest first). Throws InputError on unequal
/// lengths. The empty pair decomposes into zero blocks.
std::optional<BlockDecomposition> block_decompose(const BitString& x, const BitString& y,
                                                  std::size_t d_max);

}  // namespace tracedist
