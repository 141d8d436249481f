#pragma once

#include <vector>

#include "severi/decomp.hpp"
#include "severi/semigroup.hpp"

namespace severi {

/// v_{s,j} - v_{s,1}: exponent difference between a class representative and
/// the reference representative of the same column. Orthogonal to the
/// profile vector by construction.
struct DifferenceVector {
  long s = 0;
  int class_index = 0;  // j >= 2
  std::vector<long> vec;
};

struct DefectEntry {
  long s = 0;
  long rho = 0;
  int class_index = 0;
};

struct DefectReport {
  long total_defect = 0;               // D(k)
  std::vector<DefectEntry> dependent_entries;
  int rank = 0;                        // rank of E over Q
  std::vector<DifferenceVector> vectors;  // all of E, in charge order
};

// Greedy fundamental-dependency detection in increasing-s order over the
// nonzero elements of S below the conductor; each dependency is charged
// rho(s) at the incoming vector's column.
DefectReport syzygetic_defect(const NumericalSemigroup& S,
                              const RamificationProfile& p);

}  // namespace severi
