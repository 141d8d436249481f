#include "severi/matroid.hpp"

#include "severi/linalg.hpp"

namespace severi {

DefectReport syzygetic_defect(const NumericalSemigroup& S,
                              const RamificationProfile& p) {
  require_profile_in(S, p);
  DefectReport report;
  RowEchelon echelon;
  const int n = p.n();

  for (long s = 1; s < S.conductor(); ++s) {
    if (!S.contains(s)) continue;
    auto cs = classify(s, p);
    if (cs.psi < 2) continue;
    const auto& ref = cs.representatives.front().exponents;
    for (int j = 2; j <= cs.psi; ++j) {
      DifferenceVector dv;
      dv.s = s;
      dv.class_index = j;
      dv.vec.resize(n);
      std::vector<Rat> row(n);
      for (int i = 0; i < n; ++i) {
        dv.vec[i] = cs.representatives[j - 1].exponents[i] - ref[i];
        row[i] = Rat(dv.vec[i]);
      }
      report.vectors.push_back(dv);
      if (!echelon.insert(std::move(row))) {
        DefectEntry e;
        e.s = s;
        e.rho = S.rho(s);
        e.class_index = j;
        report.dependent_entries.push_back(e);
        report.total_defect += e.rho;
      }
    }
  }
  report.rank = echelon.rank();
  return report;
}

}  // namespace severi
