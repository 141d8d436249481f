#include "severi/estimate.hpp"

#include <algorithm>
#include <stdexcept>

namespace severi {

CodimBreakdown estimate_codimension(const NumericalSemigroup& S,
                                    const RamificationProfile& p) {
  for (long ki : p.k)
    if (!S.contains(ki)) throw std::invalid_argument("stratum trivially empty");

  CodimBreakdown out;
  const long g = S.genus();
  const long n = p.n();

  for (long i = 0; i < n; ++i) out.r_P += p.k[i] - (i + 1);

  out.rows = phi_rho_table(S, p);
  long phi_total = 0;
  for (const auto& row : out.rows) {
    out.phi_rho_sum += static_cast<long>(row.phi) * row.rho;
    phi_total += row.phi;
  }

  for (long v : S.generators())
    if (v < S.conductor() && !p.has_entry(v)) out.s_star.push_back(v);
  out.m = std::min<long>(static_cast<long>(out.s_star.size()), phi_total);
  for (long i = 0; i < out.m; ++i)
    out.generator_correction += S.rho(out.s_star[i]);

  out.defect_report = syzygetic_defect(S, p);
  out.defect = out.defect_report.total_defect;

  out.total = out.r_P + out.phi_rho_sum - out.generator_correction -
              out.defect - 1;
  out.baseline = (n - 2) * g;
  out.excess = out.total < out.baseline;
  out.degree_hypothesis = std::max<long>(n, 2 * g - 2);

  // j** is meaningful for the Torres maximal-weight semigroups.
  long gamma = S.gamma();
  if (gamma > 0 && g >= 4 * gamma + 1 &&
      S == max_weight_gamma_semigroup(g, gamma))
    out.j_star_star = compute_j_star_star(g, gamma);

  return out;
}

long hyperelliptic_bound(long g, const RamificationProfile& p) {
  const long n = p.n();
  if (p.k.empty() || p.k[0] != 2)
    throw std::invalid_argument("profile not realizable");
  auto S = NumericalSemigroup::from_generators({2, 2 * g + 1});
  for (long ki : p.k)
    if (ki < 2 * g && (ki % 2 != 0 || !S.contains(ki)))
      throw std::invalid_argument("profile not realizable");
  long bound = (n - 1) * g;
  for (long i = 1; i < n; ++i) bound += p.k[i] / 2 - (i + 1);
  return bound;
}

long compute_j_star_star(long g, long gamma) {
  if (g >= 6 * gamma + 2) return -1;
  for (long j = 0; j <= gamma - 1; ++j)
    if (6 * gamma - 2 * j - 1 < g && g <= 6 * gamma - 2 * j + 1) return j;
  throw std::logic_error("j** interval search failed");
}

GammaBound gamma_max_weight_bound(long g, long gamma, long n) {
  if (gamma <= 0 || g < 4 * gamma + 2 || n > 2 * g)
    throw std::invalid_argument("parameters outside Torres regime");
  GammaBound out;
  out.j_star_star = compute_j_star_star(g, gamma);
  long correction = 0;
  if (n <= gamma) correction = 2 * gamma + n - out.j_star_star - 3;
  else correction = 3 * gamma - out.j_star_star - 2;
  out.bound = (n - 1) * g - correction;
  return out;
}

long new_family_codim(long gamma, FamilyVariant variant) {
  if (gamma < 5)
    throw std::invalid_argument("new-family codimension requires gamma >= 5");
  // 5/2 gamma^2 + 7/2 gamma is an integer for all gamma.
  long base = (5 * gamma * gamma + 7 * gamma) / 2;
  return base + (variant == FamilyVariant::GenusThreeGammaPlusSix ? 3 : 10);
}

}  // namespace severi
