#pragma once

#include <vector>

#include "severi/semigroup.hpp"

namespace severi {

/// Strictly increasing vanishing orders (k_1 < ... < k_n) of a cusp
/// parameterization; k_0 = 0 is implicit and never stored.
struct RamificationProfile {
  std::vector<long> k;

  static RamificationProfile of(std::vector<long> entries);
  int n() const { return static_cast<int>(k.size()); }
  long max() const { return k.empty() ? 0 : k.back(); }
  bool has_entry(long v) const;
};

/// One solution of s = sum m_i * k_i with nonnegative exponents, not all zero.
struct Decomposition {
  std::vector<long> exponents;
  long value = 0;
};

/// Equivalence classes of the decompositions of s under sub-sum rewriting:
/// d ~ d' when d' replaces a proper nonempty sub-multiset of d's parts by a
/// different decomposition of the same sub-sum. psi counts classes,
/// phi = max(psi - 1, 0). Classes are ordered by their lexicographically
/// smallest exponent vector, which is also the class representative.
struct DecompositionClassSet {
  long s = 0;
  std::vector<std::vector<Decomposition>> classes;
  std::vector<Decomposition> representatives;
  int psi = 0;
  int phi = 0;
};

// All decompositions of s, in lexicographic order of exponent vector.
// Empty when s is not in the monoid span (s = 0 included: the all-zero
// vector is excluded).
std::vector<Decomposition> all_decompositions(long s,
                                              const RamificationProfile& p);

DecompositionClassSet classify(long s, const RamificationProfile& p);

struct PhiRhoRow {
  long s = 0;
  int phi = 0;
  long rho = 0;
  bool inert = false;  // phi * rho == 0
};

// One row per nonzero s in S with s <= 2*genus. Throws when a profile entry
// is not an element of S.
std::vector<PhiRhoRow> phi_rho_table(const NumericalSemigroup& S,
                                     const RamificationProfile& p);

void require_profile_in(const NumericalSemigroup& S,
                        const RamificationProfile& p);

}  // namespace severi
