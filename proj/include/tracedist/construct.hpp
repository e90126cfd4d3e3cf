#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tracedist/bitstring.hpp"
#include "tracedist/circle.hpp"
#include "tracedist/polynomial.hpp"
#include "tracedist/strings.hpp"
#include "tracedist/supremum.hpp"

namespace tracedist {

/// Largest k accepted by cyclotomic_R; the product has degree (3^{k+1} - 1) / 2.
inline constexpr unsigned kMaxCyclotomicK = 15;

/// prod_{j=0}^{k} (1 - w^{3^j}) for odd k >= 1.
IntPolynomial cyclotomic_R(unsigned k);

/// sum_{j=0}^{n/2} w^{2j} for even n.
IntPolynomial even_powers(std::size_t n);

/// Edit-distance-4 pair x = a 10 e, y = a e 01 with Q_x - Q_y = -w^{|a|} (w^2 - 1) R(w).
struct HardPairSpec {
  unsigned k = 0;
  std::size_t n = 0;  // sum_{j=0}^{k} 3^j = deg R
  BitString prefix;   // a
  BitString e;        // n + 1 bits, last bit 0, Q_e = E_n - R
  BitString x;
  BitString y;
  IntPolynomial R;
};

/// Builds and verifies the pair; InputError for even or out-of-range k, InvariantError if a
/// structural check fails (the message names it).
HardPairSpec hard_pair(unsigned k, const BitString& prefix = {});

/// x = (01)^j 101 (01)^j, y = (01)^j 011 (01)^j: two adjacent transposed bits.
std::pair<BitString, BitString> intro_pair(std::size_t j);

using IndexSet = std::vector<std::size_t>;

/// (D(x), D(y)): the positions holding a 1.
std::pair<IndexSet, IndexSet> pte_sets(const BitString& x, const BitString& y);

/// |A| = |B| and equal power sums for exponents 1..k, in exact integer arithmetic.
bool verify_pte(const IndexSet& a, const IndexSet& b, unsigned k);

/// multiplicity_at_one(Q_x - Q_y) - 1; -1 when the weights differ. InputError when x == y.
int pte_degree(const BitString& x, const BitString& y);

/// Largest k passing verify_pte on (D(x), D(y)), found by direct power sums.
int pte_degree_by_power_sums(const BitString& x, const BitString& y);

struct PairAnalysis {
  BitString x, y;
  std::size_t n = 0;
  std::size_t hamming = 0;
  std::size_t edit = 0;
  long weight_difference = 0;  // |x|_1 - |y|_1
  bool trivially_distinguishable = false;
  IntPolynomial difference;  // Q_x - Q_y
  unsigned multiplicity = 0;
  unsigned sign_changes = 0;
  IndexSet ones_x, ones_y;
  int pte_degree = -1;
  mpz_class quotient_mass;        // sum |b_j| of (Q_x - Q_y) / (w - 1)^k
  std::optional<double> quotient_mass_bound;  // present when k >= 1
  SupremumCertificate supremum;
  mpq_class sup_lower_bound;  // (1/2)(4 deg^{k+2})^{-k}
  double l1_separation = 0.0;
  std::optional<BlockDecomposition> blocks;  // skipped when weights differ
  CircleParams channel;
};

/// Requires |x| = |y| and x != y. The PTE degree is computed from the multiplicity and
/// from power sums; disagreement raises InvariantError.
PairAnalysis analyze_pair(const BitString& x, const BitString& y, const CircleParams& c,
                          const SupremumOptions& options = {});

}  // namespace tracedist
