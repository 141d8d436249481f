#pragma once

#include <optional>
#include <vector>

#include "severi/decomp.hpp"
#include "severi/matroid.hpp"
#include "severi/semigroup.hpp"

namespace severi {

/// The combinatorial codimension estimate
///   total = r_P + sum phi(s) rho(s) - sum_{i<=m} rho(s*_i) - D(k) - 1
/// together with its ingredients. `total` is conjecturally exact; only the
/// symbolic oracle upgrades it to a certificate.
struct CodimBreakdown {
  long r_P = 0;
  long phi_rho_sum = 0;
  long generator_correction = 0;
  long defect = 0;
  long total = 0;
  long baseline = 0;  // (n-2) * g
  bool excess = false;
  long degree_hypothesis = 0;  // max(n, 2g-2)
  long m = 0;
  std::vector<long> s_star;  // minimal generators < conductor absent from k
  std::optional<long> j_star_star;
  bool conjectural_exact = true;
  std::vector<PhiRhoRow> rows;
  DefectReport defect_report;
};

CodimBreakdown estimate_codimension(const NumericalSemigroup& S,
                                    const RamificationProfile& p);

// Theorem bound for a hyperelliptic cusp: (n-1)g + sum_{i>=2}(k_i/2 - i).
// Entries below 2g must be even elements of <2, 2g+1>.
long hyperelliptic_bound(long g, const RamificationProfile& p);

// Max-weight gamma-hyperelliptic bound and the interval parameter j**:
// j** = -1 when g >= 6*gamma+2, else the unique j** in [0, gamma-1] with
// 6*gamma - 2j** - 1 < g <= 6*gamma - 2j** + 1.
struct GammaBound {
  long bound = 0;
  long j_star_star = 0;
};
GammaBound gamma_max_weight_bound(long g, long gamma, long n);

long compute_j_star_star(long g, long gamma);

enum class FamilyVariant { GenusThreeGammaPlusSix, GenusThreeGammaPlusEight };

// Closed forms (5/2)gamma^2 + (7/2)gamma + 3 resp. + 10 for the minimal
// weight families with n = gamma + 1, g = 3*gamma + 6 resp. 3*gamma + 8.
long new_family_codim(long gamma, FamilyVariant variant);

}  // namespace severi
