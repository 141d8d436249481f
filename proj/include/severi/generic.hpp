#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "severi/decomp.hpp"
#include "severi/rational.hpp"
#include "severi/semigroup.hpp"

namespace severi {

struct ExcessCheck {
  Rat lhs;   // ramification codimension side
  Rat rhs;   // genus side
  bool excess = false;  // lhs < rhs
};

struct GenericSemigroupResult {
  RamificationProfile profile;
  std::optional<NumericalSemigroup> computed;
  std::vector<std::uint64_t> seeds_used;
  bool stable = false;
  long r_P_minus_1 = 0;
  long baseline = 0;  // (n-2) * genus
  bool excess = false;
};

// Achieved valuations of the subalgebra generated by explicit series
// (exact rational coefficients; f[i][j] is the t^j coefficient). Returns
// nothing when no run of min(k) consecutive valuations appears below the
// horizon.
std::optional<NumericalSemigroup> value_semigroup_of_series(
    const std::vector<std::vector<Rat>>& f, const std::vector<long>& k,
    long horizon);

// Value semigroup of a generic parameterization with the given profile,
// computed at seeded random coefficients and validated by two-seed
// agreement.
GenericSemigroupResult generic_value_semigroup(const RamificationProfile& p,
                                               std::uint64_t seed);

// <2m, 2m+2, 2m+4, 4m+5, (m+2)m+1> for even m, <..., (m+3)m+1> for odd m.
NumericalSemigroup closed_form_n3(long m);

// The four gap ranges guaranteed for profile (2m, 2m+2, ..., 2m+2n-2),
// n >= 4, m >= n+1.
std::vector<long> generic_gap_lower_bound(long n, long m);

// Exact excess inequality: n = 3 compares 6m-1 with the closed-form genus;
// n >= 4 compares 2mn + C(n-1,2) - 1 with (n-2)(5m-3n+6).
ExcessCheck generic_excess_check(long n, long m);

}  // namespace severi
