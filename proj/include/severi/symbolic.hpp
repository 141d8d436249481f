#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "severi/decomp.hpp"
#include "severi/poly.hpp"
#include "severi/semigroup.hpp"

namespace severi {

/// Truncated power series with polynomial coefficients; c[j] is the
/// coefficient of t^j.
struct PolySeries {
  std::vector<Poly> c;
  PolySeries() = default;
  explicit PolySeries(long size) : c(size) {}
  long size() const { return static_cast<long>(c.size()); }
};

PolySeries series_mul(const PolySeries& a, const PolySeries& b, long cap);

/// The universal parameterization f_i = t^{k_i} + sum_{l>k_i} a_{i,l} t^l,
/// truncated at degree `truncation`, with a dense registry of the formal
/// variables a_{i,l}.
struct UniversalMap {
  RamificationProfile profile;
  long truncation = 0;
  std::vector<std::pair<int, long>> var_info;  // id -> (series index, power)
  std::map<std::pair<int, long>, VarId> var_lookup;
  std::vector<PolySeries> f;

  static UniversalMap build(const RamificationProfile& p, long truncation);

  int var_count() const { return static_cast<int>(var_info.size()); }
  std::optional<VarId> var(int series, long power) const;
  long var_weight(VarId v) const;  // power - k_series, always >= 1
  std::string var_name(VarId v) const;
};

/// One recorded vanishing condition: the coefficient forced to zero by the
/// gap `gap_q` while walking up the column indexed by `column_s`. The true
/// condition is numerator / prod(denominator_factors); denominators are
/// leading coefficients of sacrificed pivot polynomials and are generically
/// nonzero.
struct Condition {
  long column_s = 0;
  int class_index = 0;
  long gap_q = 0;
  long fresh_weight = 0;       // gap_q - column_s
  std::vector<long> diff;      // class representative minus reference
  Poly numerator;
  std::vector<Poly> denominator_factors;
};

struct WalkOutcome {
  long column_s = 0;
  int class_index = 0;
  bool sacrificed = false;
  long sacrifice_valuation = -1;
  long conditions_recorded = 0;
};

struct ConditionLedger {
  UniversalMap map;
  std::vector<Condition> entries;
  std::vector<WalkOutcome> walks;
  std::vector<long> registry_valuations;  // valuations holding sacrificed pivots
  long independent_count = 0;
  long r_P = 0;
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("time budget exceeded") {}
};

/// Cooperative deadline for batch scans.
struct Budget {
  std::chrono::steady_clock::time_point deadline;
  void check() const {
    if (std::chrono::steady_clock::now() > deadline) throw BudgetExceeded();
  }
};

// The direct recursion for hyperelliptic cusps: F_i = f_i - f_1^{k_i/2},
// then repeatedly strip the even coefficient with a power of f_1 and record
// the odd (gap) coefficient. Exactly sum_{i>=2}(g - k_i/2) entries.
ConditionLedger hyperelliptic_conditions(long g, const RamificationProfile& p,
                                         std::uint64_t seed = 42);

// Column-walking oracle for arbitrary S: one walk per non-reference
// decomposition class of every s in S below the conductor, pivoting with
// monomials in the span of the profile and with sacrificed cross-column
// polynomials elsewhere.
ConditionLedger walk_columns(const NumericalSemigroup& S,
                             const RamificationProfile& p, std::uint64_t seed,
                             const Budget* budget = nullptr);

struct Certificate {
  bool exact = false;
  std::string status;  // "exact" or a diagnostic
  long independent_count = 0;
  long r_P = 0;
  long codimension = -1;  // r_P + independent_count - 1 when exact
  std::optional<NumericalSemigroup> witness_semigroup;
  std::vector<Rat> witness;  // per variable id
};

// Solve the ledger conditions by exact per-weight affine elimination with
// seeded random free variables, then recompute the witness's value
// semigroup and compare with S.
Certificate certify_stratum(const NumericalSemigroup& S,
                            const RamificationProfile& p, std::uint64_t seed,
                            const Budget* budget = nullptr);

Certificate certify_from_ledger(const ConditionLedger& ledger,
                                const NumericalSemigroup& S,
                                std::uint64_t seed,
                                const Budget* budget = nullptr);

}  // namespace severi
