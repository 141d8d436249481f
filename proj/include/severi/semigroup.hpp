#pragma once

#include <string>
#include <vector>

namespace severi {

/// A numerical semigroup: a cofinite subset of N closed under addition.
/// Stores the minimal generating set, the gap set, and the derived
/// invariants used throughout (genus = delta-invariant, conductor, weight,
/// hyperellipticity degree gamma).
class NumericalSemigroup {
 public:
  static NumericalSemigroup from_generators(const std::vector<long>& gens);

  // Build from an explicit membership table for [0, conductor); everything
  // at or above `conductor` is a member. `membership[v]` must be closed
  // under addition within the table.
  static NumericalSemigroup from_membership(std::vector<char> membership,
                                            long conductor);

  bool contains(long v) const;

  // #{r > s : r not in S}. Defined for any s >= 0, member or not.
  long rho(long s) const;

  const std::vector<long>& generators() const { return generators_; }
  const std::vector<long>& gaps() const { return gaps_; }
  long conductor() const { return conductor_; }
  long genus() const { return static_cast<long>(gaps_.size()); }
  long weight() const { return weight_; }
  long gamma() const { return gamma_; }

  // Least nonzero element.
  long multiplicity() const;

  bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

  // "<4,10,15>"
  std::string id() const;

 private:
  NumericalSemigroup() = default;
  void derive_invariants();

  std::vector<char> membership_;  // valid on [0, conductor_)
  std::vector<long> generators_;  // minimal generating set, sorted
  std::vector<long> gaps_;        // sorted
  long conductor_ = 0;
  long weight_ = 0;
  long gamma_ = 0;
};

long weight(const NumericalSemigroup& s);

// The unique gamma with exactly gamma even elements of S in [2, 4*gamma]
// and 4*gamma + 2 in S.
long hyperellipticity_degree(const NumericalSemigroup& s);

// <4, 4g'+2, 2g-4g'+1>, the gamma-hyperelliptic semigroup of genus g with
// maximal weight (Torres). Requires g >= 4*gamma + 1.
NumericalSemigroup max_weight_gamma_semigroup(long g, long gamma);

// Nonzero elements: the even integers in [2*gamma+2, 2g-2*gamma] together
// with every integer >= 2g-2*gamma; the gamma-hyperelliptic semigroup of
// genus g with minimal weight (staircase Dyck path). Requires g >= 2*gamma+1.
NumericalSemigroup min_weight_gamma_semigroup(long g, long gamma);

}  // namespace severi
