#include "tracedist/strings.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "tracedist/error.hpp"

namespace tracedist {

namespace {

void require_equal_lengths(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw InputError("unequal lengths");
}

constexpr std::array<BlockCase, 5> kAllCases = {BlockCase::Identical, BlockCase::ShiftedLeft,
                                                BlockCase::ShiftedRight, BlockCase::HeadMismatch,
                                                BlockCase::TailMismatch};

// Run-length tables giving O(1) block tests.
//   equal[i]   = max r with x[i..i+r) == y[i..i+r)
//   lead[i]    = max r with x[i+1..i+1+r) == y[i..i+r)
//   trail[i]   = max r with x[i..i+r) == y[i+1..i+1+r)
struct MatchRuns {
  std::vector<std::size_t> equal, lead, trail;

  MatchRuns(const BitString& x, const BitString& y) {
    const std::size_t n = x.size();
    equal.assign(n + 1, 0);
    lead.assign(n + 1, 0);
    trail.assign(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
      equal[i] = x[i] == y[i] ? equal[i + 1] + 1 : 0;
      if (i + 1 < n) {
        lead[i] = x[i + 1] == y[i] ? lead[i + 1] + 1 : 0;
        trail[i] = x[i] == y[i + 1] ? trail[i + 1] + 1 : 0;
      }
    }
  }
};

bool fits(const BitString& x, const BitString& y, const MatchRuns& runs, std::size_t s,
          std::size_t len, BlockCase kind) {
  const std::size_t e = s + len;
  switch (kind) {
    case BlockCase::Identical:
      return runs.equal[s] >= len;
    case BlockCase::ShiftedLeft:
      return runs.lead[s] >= len - 1;
    case BlockCase::ShiftedRight:
      return runs.trail[s] >= len - 1;
    case BlockCase::HeadMismatch:
      return x[s] != y[s] && runs.equal[s + 1] >= len - 1;
    case BlockCase::TailMismatch:
      return x[e - 1] != y[e - 1] && runs.equal[s] >= len - 1;
  }
  return false;
}

Block make_block(const BitString& x, const BitString& y, std::size_t s, std::size_t len,
                 BlockCase kind) {
  Block blk;
  blk.start = s;
  blk.length = len;
  blk.kind = kind;
  const std::size_t e = s + len;
  switch (kind) {
    case BlockCase::Identical:
      blk.shared = x.substr(s, len);
      break;
    case BlockCase::ShiftedLeft:
      blk.a = x[s];
      blk.b = y[e - 1];
      blk.shared = y.substr(s, len - 1);
      break;
    case BlockCase::ShiftedRight:
      blk.a = x[e - 1];
      blk.b = y[s];
      blk.shared = x.substr(s, len - 1);
      break;
    case BlockCase::HeadMismatch:
      blk.a = x[s];
      blk.b = y[s];
      blk.shared = x.substr(s + 1, len - 1);
      break;
    case BlockCase::TailMismatch:
      blk.a = x[e - 1];
      blk.b = y[e - 1];
      blk.shared = x.substr(s, len - 1);
      break;
  }
  return blk;
}

}  // namespace

std::size_t hamming_distance(const BitString& x, const BitString& y) {
  require_equal_lengths(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::size_t edit_distance(const BitString& x, const BitString& y) {
  // Rolling-row LCS.
  std::vector<std::size_t> prev(y.size() + 1, 0), cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return x.size() + y.size() - 2 * prev[y.size()];
}

bool block_matches(const BitString& x, const BitString& y, std::size_t start, std::size_t len,
                   BlockCase kind) {
  require_equal_lengths(x, y);
  if (len == 0 || start + len > x.size()) return false;
  return fits(x, y, MatchRuns(x, y), start, len, kind);
}

std::optional<BlockDecomposition> block_decompose(const BitString& x, const BitString& y,
                                                  std::size_t d_max) {
  require_equal_lengths(x, y);
  const std::size_t n = x.size();
  const MatchRuns runs(x, y);
  constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

  // Suffix DP: count[t] = fewest blocks covering [t, n); choice[t] = lexicographically best
  // first block among those achieving it.
  struct Choice {
    std::size_t len = 0;
    BlockCase kind = BlockCase::Identical;
  };
  std::vector<std::size_t> count(n + 1, kUnreachable);
  std::vector<Choice> choice(n + 1);
  count[n] = 0;
  for (std::size_t t = n; t-- > 0;) {
    for (std::size_t len = n - t; len >= 1; --len) {  // longest first within a case
      const std::size_t rest = count[t + len];
      if (rest == kUnreachable) continue;
      for (BlockCase kind : kAllCases) {
        if (!fits(x, y, runs, t, len, kind)) continue;
        const Choice& cur = choice[t];
        const bool better = rest + 1 < count[t] ||
                            (rest + 1 == count[t] && case_label(kind) < case_label(cur.kind));
        if (better) {
          count[t] = rest + 1;
          choice[t] = {len, kind};
        }
        break;  // lowest matching case label for this segment
      }
    }
  }
  if (count[0] > d_max) return std::nullopt;

  BlockDecomposition out;
  for (std::size_t t = 0; t < n; t += choice[t].len) {
    out.blocks.push_back(make_block(x, y, t, choice[t].len, choice[t].kind));
  }
  return out;
}

}  // namespace tracedist
