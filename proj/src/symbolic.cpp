#include "severi/symbolic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "severi/generic.hpp"
#include "severi/linalg.hpp"
#include "severi/rng.hpp"

namespace severi {

PolySeries series_mul(const PolySeries& a, const PolySeries& b, long cap) {
  PolySeries out(cap + 1);
  for (long i = 0; i <= cap && i < a.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (long j = 0; j + i <= cap && j < b.size(); ++j) {
      if (b.c[j].is_zero()) continue;
      out.c[i + j] += a.c[i] * b.c[j];
    }
  }
  return out;
}

UniversalMap UniversalMap::build(const RamificationProfile& p, long truncation) {
  UniversalMap m;
  m.profile = p;
  m.truncation = truncation;
  const int n = p.n();
  for (int i = 0; i < n; ++i)
    for (long l = p.k[i] + 1; l <= truncation; ++l) {
      VarId id = static_cast<VarId>(m.var_info.size());
      m.var_info.emplace_back(i, l);
      m.var_lookup.emplace(std::make_pair(i, l), id);
    }
  for (int i = 0; i < n; ++i) {
    PolySeries fi(truncation + 1);
    fi.c[p.k[i]] = Poly::constant(Rat(1));
    for (long l = p.k[i] + 1; l <= truncation; ++l)
      fi.c[l] = Poly::variable(*m.var(i, l));
    m.f.push_back(std::move(fi));
  }
  return m;
}

std::optional<VarId> UniversalMap::var(int series, long power) const {
  auto it = var_lookup.find({series, power});
  if (it == var_lookup.end()) return std::nullopt;
  return it->second;
}

long UniversalMap::var_weight(VarId v) const {
  const auto& [i, l] = var_info.at(v);
  return l - profile.k[i];
}

std::string UniversalMap::var_name(VarId v) const {
  const auto& [i, l] = var_info.at(v);
  std::ostringstream os;
  os << "a_" << (i + 1) << "_" << l;
  return os.str();
}

namespace {

// Monoid span of the profile entries with lexicographically smallest
// exponent reconstruction.
class SpanTable {
 public:
  SpanTable(const std::vector<long>& k, long cap) : k_(k), cap_(cap) {
    const int n = static_cast<int>(k.size());
    reach_.assign(n + 1, std::vector<char>(cap + 1, 0));
    reach_[n][0] = 1;
    for (int i = n - 1; i >= 0; --i)
      for (long v = 0; v <= cap; ++v) {
        for (long m = 0; m * k_[i] <= v; ++m)
          if (reach_[i + 1][v - m * k_[i]]) {
            reach_[i][v] = 1;
            break;
          }
      }
  }

  bool representable(long v) const {
    return v >= 0 && v <= cap_ && reach_[0][v];
  }

  std::vector<long> lex_smallest(long v) const {
    const int n = static_cast<int>(k_.size());
    std::vector<long> e(n, 0);
    for (int i = 0; i < n; ++i) {
      long m = 0;
      while (!(v - m * k_[i] >= 0 && reach_[i + 1][v - m * k_[i]])) ++m;
      e[i] = m;
      v -= m * k_[i];
    }
    return e;
  }

 private:
  std::vector<long> k_;
  long cap_;
  std::vector<std::vector<char>> reach_;
};

struct RegisteredPivot {
  PolySeries series;
  std::vector<Poly> denominator_factors;
  long column_s = 0;
  int class_index = 0;
};

class WalkEngine {
 public:
  WalkEngine(const NumericalSemigroup& S, const RamificationProfile& p)
      : S_(S),
        cap_(S.conductor() + 1),
        map_(UniversalMap::build(p, S.conductor() + p.max() + 2)),
        span_(p.k, S.conductor() + 1) {}

  const UniversalMap& map() const { return map_; }

  const PolySeries& mono_series(const std::vector<long>& exps) {
    auto it = mono_cache_.find(exps);
    if (it != mono_cache_.end()) return it->second;
    PolySeries prod(cap_ + 1);
    prod.c[0] = Poly::constant(Rat(1));
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (long t = 0; t < exps[i]; ++t)
        prod = series_mul(prod, map_.f[i], cap_);
    return mono_cache_.emplace(exps, std::move(prod)).first->second;
  }

  // Walk one column class; appends to the ledger.
  void walk(long s, int class_index, const std::vector<long>& rep,
            const std::vector<long>& ref, ConditionLedger& led,
            const Budget* budget) {
    const long conductor = S_.conductor();
    PolySeries F(cap_ + 1);
    {
      const PolySeries& a = mono_series(rep);
      const PolySeries& b = mono_series(ref);
      for (long t = 0; t <= cap_; ++t) F.c[t] = a.c[t] - b.c[t];
    }
    std::vector<Poly> dens;
    std::vector<long> diff(rep.size());
    for (std::size_t i = 0; i < rep.size(); ++i) diff[i] = rep[i] - ref[i];

    WalkOutcome outcome;
    outcome.column_s = s;
    outcome.class_index = class_index;

    for (long q = s + 1; q < conductor; ++q) {
      if (budget) budget->check();
      if (F.c[q].is_zero()) continue;
      if (!S_.contains(q)) {
        Condition cond;
        cond.column_s = s;
        cond.class_index = class_index;
        cond.gap_q = q;
        cond.fresh_weight = q - s;
        cond.diff = diff;
        cond.numerator = F.c[q];
        cond.denominator_factors = dens;
        led.entries.push_back(std::move(cond));
        ++outcome.conditions_recorded;
        F.c[q] = Poly();
        continue;
      }
      // q in S: cancel the leading term against a pivot of valuation q.
      Poly lead = F.c[q];
      if (span_.representable(q)) {
        const PolySeries& M = mono_series(span_.lex_smallest(q));
        for (long t = q; t <= cap_; ++t)
          if (!M.c[t].is_zero()) F.c[t] -= lead * M.c[t];
      } else {
        auto prod = registered_product(q);
        if (!prod) {
          registry_.emplace(q, RegisteredPivot{F, dens, s, class_index});
          outcome.sacrificed = true;
          outcome.sacrifice_valuation = q;
          break;
        }
        // F' = L*F - lead*P with L the product of the used pivots' leading
        // coefficients; used pivots' own denominators cancel.
        Poly L = Poly::constant(Rat(1));
        for (const Poly& lc : prod->lc_factors) L = L * lc;
        for (long t = q; t <= cap_; ++t) {
          Poly updated = L * F.c[t] - lead * prod->series.c[t];
          F.c[t] = std::move(updated);
        }
        for (Poly& lc : prod->lc_factors) dens.push_back(std::move(lc));
      }
    }
    led.walks.push_back(outcome);
  }

  std::vector<long> registry_valuations() const {
    std::vector<long> out;
    for (const auto& [v, r] : registry_) out.push_back(v);
    return out;
  }

 private:
  struct PivotProduct {
    PolySeries series;
    std::vector<Poly> lc_factors;
  };

  // v = sum of registered valuations (at least one) plus a span element.
  std::optional<PivotProduct> registered_product(long v) {
    std::vector<long> keys;
    for (const auto& [key, r] : registry_) keys.push_back(key);
    std::vector<long> use;
    if (!search_keys(v, keys, 0, false, use)) return std::nullopt;
    long rest = v;
    PivotProduct out;
    out.series = PolySeries(cap_ + 1);
    out.series.c[0] = Poly::constant(Rat(1));
    for (long key : use) {
      const RegisteredPivot& rp = registry_.at(key);
      out.series = series_mul(out.series, rp.series, cap_);
      out.lc_factors.push_back(rp.series.c[key]);
      rest -= key;
    }
    if (rest > 0)
      out.series = series_mul(out.series, mono_series(span_.lex_smallest(rest)),
                              cap_);
    return out;
  }

  bool search_keys(long v, const std::vector<long>& keys, std::size_t i,
                   bool used_any, std::vector<long>& use) {
    if (used_any && span_.representable(v)) return true;
    if (i == keys.size()) return false;
    // Not using keys[i] at all:
    if (search_keys(v, keys, i + 1, used_any, use)) return true;
    long key = keys[i];
    int count = 0;
    long rest = v;
    while (rest >= key) {
      rest -= key;
      ++count;
      use.push_back(key);
      if (search_keys(rest, keys, i + 1, true, use)) return true;
    }
    use.resize(use.size() - count);
    return false;
  }

  const NumericalSemigroup& S_;
  long cap_;
  UniversalMap map_;
  SpanTable span_;
  std::map<std::vector<long>, PolySeries> mono_cache_;
  std::map<long, RegisteredPivot> registry_;
};

std::vector<Rat> random_point(const UniversalMap& map, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Rat> point(map.var_count());
  for (auto& x : point) x = rng.rat_coefficient();
  return point;
}

// Rank of the fresh-variable coefficient rows of the true conditions,
// grouped by fresh weight (blocks use disjoint variables, so the global
// rank is the sum of the block ranks).
long ledger_rank(const UniversalMap& map, const std::vector<Condition>& conds,
                 std::uint64_t seed) {
  const int n = map.profile.n();
  std::vector<Rat> point = random_point(map, seed);
  std::map<long, RowEchelon> blocks;
  for (const auto& cond : conds) {
    std::vector<Rat> row(n, Rat(0));
    if (cond.denominator_factors.empty()) {
      for (int i = 0; i < n; ++i) {
        auto v = map.var(i, map.profile.k[i] + cond.fresh_weight);
        if (v) row[i] = cond.numerator.derivative_at(*v, point);
      }
    } else {
      Rat den(1);
      std::vector<Rat> den_vals;
      for (const auto& d : cond.denominator_factors) {
        den_vals.push_back(d.eval(point));
        den *= den_vals.back();
      }
      Rat num_val = cond.numerator.eval(point);
      for (int i = 0; i < n; ++i) {
        auto v = map.var(i, map.profile.k[i] + cond.fresh_weight);
        if (!v) continue;
        // d(num/den) scaled by den^2: dnum*den - num*dden.
        Rat dden(0);
        for (std::size_t j = 0; j < cond.denominator_factors.size(); ++j) {
          Rat prod = cond.denominator_factors[j].derivative_at(*v, point);
          for (std::size_t l = 0; l < den_vals.size(); ++l)
            if (l != j) prod *= den_vals[l];
          dden += prod;
        }
        row[i] = cond.numerator.derivative_at(*v, point) * den -
                 num_val * dden;
      }
    }
    blocks[cond.fresh_weight].insert(std::move(row));
  }
  long rank = 0;
  for (const auto& [w, ech] : blocks) rank += ech.rank();
  return rank;
}

long stable_rank(const UniversalMap& map, const std::vector<Condition>& conds,
                 std::uint64_t seed) {
  long r1 = ledger_rank(map, conds, derive_seed(seed, 101));
  long r2 = ledger_rank(map, conds, derive_seed(seed, 202));
  if (r1 != r2)
    throw std::runtime_error(
        "independent count unstable across seeds (rank " + std::to_string(r1) +
        " vs " + std::to_string(r2) + ")");
  return r1;
}

long ramification_count(const RamificationProfile& p) {
  long r = 0;
  for (long i = 0; i < p.n(); ++i) r += p.k[i] - (i + 1);
  return r;
}

}  // namespace

ConditionLedger hyperelliptic_conditions(long g, const RamificationProfile& p,
                                         std::uint64_t seed) {
  const long n = p.n();
  if (n > 2 * g)
    throw std::invalid_argument("profile not realizable");
  if (p.k.empty() || p.k[0] != 2)
    throw std::invalid_argument("profile not realizable");
  auto S = NumericalSemigroup::from_generators({2, 2 * g + 1});
  for (long ki : p.k)
    if (ki % 2 != 0 || ki >= 2 * g)
      throw std::invalid_argument("profile not realizable");

  const long cap = 2 * g + p.max() + 2;
  ConditionLedger led;
  led.map = UniversalMap::build(p, cap);
  led.r_P = ramification_count(p);

  // Powers of f_1 up to exponent g.
  std::vector<PolySeries> pow1(g + 1);
  pow1[0] = PolySeries(cap + 1);
  pow1[0].c[0] = Poly::constant(Rat(1));
  for (long e = 1; e <= g; ++e)
    pow1[e] = series_mul(pow1[e - 1], led.map.f[0], cap);

  for (long i = 1; i < n; ++i) {
    const long ki = p.k[i];
    PolySeries F(cap + 1);
    for (long t = 0; t <= cap; ++t)
      F.c[t] = led.map.f[i].c[t] - pow1[ki / 2].c[t];
    std::vector<long> diff(n, 0);
    diff[0] = ki / 2;
    diff[i] = -1;

    WalkOutcome outcome;
    outcome.column_s = ki;
    outcome.class_index = 2;
    for (long j = 1; j <= g - ki / 2; ++j) {
      const long even = ki + 2 * (j - 1);
      if (j > 1 && !F.c[even].is_zero()) {
        Poly lead = F.c[even];
        const PolySeries& M = pow1[even / 2];
        for (long t = even; t <= cap; ++t)
          if (!M.c[t].is_zero()) F.c[t] -= lead * M.c[t];
      }
      const long gap = ki + 2 * j - 1;
      Condition cond;
      cond.column_s = ki;
      cond.class_index = 2;
      cond.gap_q = gap;
      cond.fresh_weight = gap - ki;
      cond.diff = diff;
      cond.numerator = F.c[gap];
      led.entries.push_back(std::move(cond));
      ++outcome.conditions_recorded;
      F.c[gap] = Poly();
    }
    led.walks.push_back(outcome);
  }
  led.independent_count = stable_rank(led.map, led.entries, seed);
  return led;
}

ConditionLedger walk_columns(const NumericalSemigroup& S,
                             const RamificationProfile& p, std::uint64_t seed,
                             const Budget* budget) {
  require_profile_in(S, p);
  WalkEngine engine(S, p);
  ConditionLedger led;
  led.r_P = ramification_count(p);

  const long conductor = S.conductor();
  const long g = S.genus();
  for (long s = 1; s < conductor && s <= 2 * g; ++s) {
    if (!S.contains(s)) continue;
    if (budget) budget->check();
    auto cls = classify(s, p);
    if (cls.psi < 2) continue;
    const auto& ref = cls.representatives.front().exponents;
    for (int j = 2; j <= cls.psi; ++j)
      engine.walk(s, j, cls.representatives[j - 1].exponents, ref, led, budget);
  }
  led.registry_valuations = engine.registry_valuations();
  led.map = engine.map();
  led.independent_count = stable_rank(led.map, led.entries, seed);
  return led;
}

namespace {

// Exact affine data of one condition restricted to the unknown fresh
// variables, obtained by interpolation of numerator/denominator evaluations
// (the restriction is affine by weight homogeneity).
struct AffineRow {
  std::vector<Rat> coef;  // per unknown
  Rat rhs;                // sum coef*x = rhs
  const Condition* cond;
};

class CertifyError : public std::runtime_error {
 public:
  explicit CertifyError(const std::string& s) : std::runtime_error(s) {}
};

Rat eval_true(const Condition& cond, const std::vector<Rat>& point) {
  Rat den(1);
  for (const auto& d : cond.denominator_factors) {
    Rat dv = d.eval(point);
    if (dv == 0) throw CertifyError("denominator vanished at sample point");
    den *= dv;
  }
  return cond.numerator.eval(point) / den;
}

}  // namespace

Certificate certify_from_ledger(const ConditionLedger& led,
                                const NumericalSemigroup& S,
                                std::uint64_t seed, const Budget* budget) {
  const UniversalMap& map = led.map;
  const int n = map.profile.n();
  Certificate cert;
  cert.independent_count = led.independent_count;
  cert.r_P = led.r_P;

  SplitMix64 rng(derive_seed(seed, 303));
  const int V = map.var_count();
  std::vector<bool> assigned(V, false);
  std::vector<Rat> value(V);
  auto ensure = [&](VarId v) {
    if (!assigned[v]) {
      assigned[v] = true;
      value[v] = rng.rat_coefficient();
    }
  };

  // Conditions grouped by fresh weight, ascending; ledger order within.
  std::map<long, std::vector<const Condition*>> blocks;
  for (const auto& c : led.entries) blocks[c.fresh_weight].push_back(&c);

  try {
    for (const auto& [w, conds] : blocks) {
      if (budget) budget->check();
      std::vector<VarId> fresh;
      std::set<VarId> fresh_set;
      for (int i = 0; i < n; ++i) {
        auto v = map.var(i, map.profile.k[i] + w);
        if (v) {
          fresh.push_back(*v);
          fresh_set.insert(*v);
        }
      }
      // Assign every non-fresh variable any condition of this block touches.
      std::set<VarId> support;
      for (const Condition* c : conds) {
        c->numerator.collect_vars(support);
        for (const auto& d : c->denominator_factors) d.collect_vars(support);
      }
      for (VarId v : support)
        if (!fresh_set.count(v)) ensure(v);

      std::vector<VarId> unknowns;
      for (VarId v : fresh)
        if (!assigned[v] && support.count(v)) unknowns.push_back(v);
      const std::size_t U = unknowns.size();

      // Affine interpolation of each condition over the unknowns.
      std::vector<AffineRow> rows;
      for (const Condition* c : conds) {
        std::vector<Rat> base(U);
        AffineRow row;
        row.cond = c;
        row.coef.resize(U);
        bool done = false;
        for (int attempt = 0; attempt < 8 && !done; ++attempt) {
          try {
            for (auto& b : base) b = rng.rat_coefficient();
            std::vector<Rat> point = value;
            for (std::size_t u = 0; u < U; ++u) point[unknowns[u]] = base[u];
            Rat v0 = eval_true(*c, point);
            Rat affine_const = v0;
            for (std::size_t u = 0; u < U; ++u) {
              point[unknowns[u]] = base[u] + 1;
              row.coef[u] = eval_true(*c, point) - v0;
              point[unknowns[u]] = base[u];
              affine_const -= row.coef[u] * base[u];
            }
            row.rhs = -affine_const;
            done = true;
          } catch (const CertifyError&) {
            // unlucky denominator zero; resample
          }
        }
        if (!done)
          throw CertifyError("certification inconclusive: denominators vanish");
        rows.push_back(std::move(row));
      }

      // Exact elimination; pivot at the largest-index unknown.
      std::vector<std::pair<std::size_t, AffineRow>> solved;  // (pivot, row)
      for (auto& row : rows) {
        for (const auto& [pcol, prow] : solved) {
          if (row.coef[pcol] == 0) continue;
          Rat factor = row.coef[pcol] / prow.coef[pcol];
          for (std::size_t u = 0; u < U; ++u)
            row.coef[u] -= factor * prow.coef[u];
          row.rhs -= factor * prow.rhs;
          row.coef[pcol] = 0;
        }
        long pivot = -1;
        for (std::size_t u = U; u-- > 0;)
          if (row.coef[u] != 0) {
            pivot = static_cast<long>(u);
            break;
          }
        if (pivot < 0) {
          if (row.rhs != 0)
            throw CertifyError(
                "certification inconclusive: dependent condition "
                "inconsistent at gap " +
                std::to_string(row.cond->gap_q));
          continue;  // redundant, as predicted by the defect
        }
        solved.emplace_back(static_cast<std::size_t>(pivot), std::move(row));
      }

      // Free fresh variables get random values; pivots solve in reverse.
      std::set<std::size_t> pivot_cols;
      for (const auto& [pcol, row] : solved) pivot_cols.insert(pcol);
      for (std::size_t u = 0; u < U; ++u)
        if (!pivot_cols.count(u)) {
          assigned[unknowns[u]] = true;
          value[unknowns[u]] = rng.rat_coefficient();
        }
      for (auto it = solved.rbegin(); it != solved.rend(); ++it) {
        auto& [pcol, row] = *it;
        Rat sum = row.rhs;
        for (std::size_t u = 0; u < U; ++u) {
          if (u == pcol) continue;
          if (row.coef[u] == 0) continue;
          sum -= row.coef[u] * value[unknowns[u]];
        }
        assigned[unknowns[pcol]] = true;
        value[unknowns[pcol]] = sum / row.coef[pcol];
      }
    }
  } catch (const CertifyError& e) {
    cert.status = e.what();
    return cert;
  }

  for (VarId v = 0; v < V; ++v) ensure(v);
  cert.witness = value;

  // Exactness of the solve: every condition vanishes, denominators do not.
  for (const auto& c : led.entries) {
    Rat den(1);
    for (const auto& d : c.denominator_factors) den *= d.eval(value);
    if (den == 0) {
      cert.status = "certification inconclusive: denominator vanished at witness";
      return cert;
    }
    if (c.numerator.eval(value) != 0) {
      cert.status =
          "certification inconclusive: residual condition at gap " +
          std::to_string(c.gap_q);
      return cert;
    }
  }

  // Value semigroup of the witness.
  std::vector<std::vector<Rat>> coeffs(n);
  for (int i = 0; i < n; ++i) {
    coeffs[i].assign(map.truncation + 1, Rat(0));
    coeffs[i][map.profile.k[i]] = 1;
    for (long l = map.profile.k[i] + 1; l <= map.truncation; ++l)
      coeffs[i][l] = value[*map.var(i, l)];
  }
  auto Sw = value_semigroup_of_series(coeffs, map.profile.k, map.truncation);
  if (!Sw) {
    cert.status = "certification inconclusive: witness semigroup undetermined";
    return cert;
  }
  cert.witness_semigroup = *Sw;
  if (*Sw == S) {
    cert.exact = true;
    cert.status = "exact";
    cert.codimension = cert.r_P + cert.independent_count - 1;
  } else {
    cert.status = "stratum possibly empty or smaller";
  }
  return cert;
}

Certificate certify_stratum(const NumericalSemigroup& S,
                            const RamificationProfile& p, std::uint64_t seed,
                            const Budget* budget) {
  ConditionLedger led = walk_columns(S, p, seed, budget);
  return certify_from_ledger(led, S, seed, budget);
}

}  // namespace severi
