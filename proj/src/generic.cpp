#include "severi/generic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "severi/rng.hpp"

namespace severi {

namespace {

// Insert a coefficient row into a leading-position echelon; returns the
// final leading position or -1 when the row vanishes within the horizon.
long echelon_insert(std::map<long, std::vector<Rat>>& rows,
                    std::vector<Rat> row) {
  const long width = static_cast<long>(row.size());
  long lead = -1;
  for (long j = 0; j < width; ++j) {
    if (row[j] == 0) continue;
    auto it = rows.find(j);
    if (it == rows.end()) {
      lead = j;
      break;
    }
    Rat c = row[j];
    const auto& basis = it->second;
    for (long t = j; t < width; ++t) row[t] -= c * basis[t];
    row[j] = 0;
  }
  if (lead < 0) return -1;
  Rat inv = 1 / row[lead];
  for (long t = lead; t < width; ++t) row[t] *= inv;
  rows.emplace(lead, std::move(row));
  return lead;
}

struct MonomialOrder {
  long value;
  std::vector<long> exps;
  bool operator<(const MonomialOrder& o) const {
    if (value != o.value) return value < o.value;
    return exps < o.exps;
  }
};

void enumerate_monomials(const std::vector<long>& k, long horizon,
                         std::size_t i, long value, std::vector<long>& cur,
                         std::vector<MonomialOrder>& out) {
  if (i == k.size()) {
    if (value > 0) out.push_back({value, cur});
    return;
  }
  for (long m = 0; value + m * k[i] <= horizon; ++m) {
    cur[i] = m;
    enumerate_monomials(k, horizon, i + 1, value + m * k[i], cur, out);
  }
  cur[i] = 0;
}

std::vector<Rat> series_product(const std::vector<std::vector<Rat>>& f,
                                const std::vector<long>& exps, long horizon) {
  std::vector<Rat> prod(horizon + 1, Rat(0));
  prod[0] = 1;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (long e = 0; e < exps[i]; ++e) {
      std::vector<Rat> next(horizon + 1, Rat(0));
      for (long a = 0; a <= horizon; ++a) {
        if (prod[a] == 0) continue;
        for (long b = 0; a + b <= horizon &&
                         b < static_cast<long>(f[i].size());
             ++b) {
          if (f[i][b] == 0) continue;
          next[a + b] += prod[a] * f[i][b];
        }
      }
      prod = std::move(next);
    }
  return prod;
}

}  // namespace

std::optional<NumericalSemigroup> value_semigroup_of_series(
    const std::vector<std::vector<Rat>>& f, const std::vector<long>& k,
    long horizon) {
  const long run = *std::min_element(k.begin(), k.end());
  std::vector<MonomialOrder> monos;
  std::vector<long> cur(k.size(), 0);
  enumerate_monomials(k, horizon, 0, 0, cur, monos);
  std::sort(monos.begin(), monos.end());

  std::map<long, std::vector<Rat>> rows;
  std::vector<char> achieved(horizon + 2, 0);

  auto find_run = [&](long final_below) -> long {
    long streak = 0;
    for (long v = 1; v < final_below; ++v) {
      streak = achieved[v] ? streak + 1 : 0;
      if (streak == run) return v - run + 1;
    }
    return -1;
  };

  auto build = [&](long c) {
    long conductor = 0;
    for (long v = c - 1; v >= 1; --v)
      if (!achieved[v]) {
        conductor = v + 1;
        break;
      }
    std::vector<char> member(std::max<long>(conductor, 1), 0);
    member[0] = 1;
    for (long v = 1; v < conductor; ++v) member[v] = achieved[v];
    return NumericalSemigroup::from_membership(std::move(member), conductor);
  };

  std::size_t idx = 0;
  while (idx < monos.size()) {
    long value = monos[idx].value;
    // Pivots below `value` are final.
    long c = find_run(value);
    if (c >= 0) return build(c);
    while (idx < monos.size() && monos[idx].value == value) {
      long lead =
          echelon_insert(rows, series_product(f, monos[idx].exps, horizon));
      if (lead >= 0) achieved[lead] = 1;
      ++idx;
    }
  }
  long c = find_run(horizon + 1);
  if (c >= 0) return build(c);
  return std::nullopt;
}

GenericSemigroupResult generic_value_semigroup(const RamificationProfile& p,
                                               std::uint64_t seed) {
  const long n = p.n();
  if (n == 1 && p.k[0] > 1)
    throw std::runtime_error(
        "generic semigroup undetermined (value set not cofinite)");

  const long maxk = p.max();
  long horizon = 4 * maxk + 8;
  if (n == 3 && p.k[0] >= 2 && p.k[0] % 2 == 0 && p.k[1] == p.k[0] + 2 &&
      p.k[2] == p.k[0] + 4) {
    horizon = std::max(horizon, 2 * closed_form_n3(p.k[0] / 2).conductor());
  }
  const long horizon_cap = std::max(4 * maxk * maxk, horizon);

  auto attempt = [&](std::uint64_t s,
                     long h) -> std::optional<NumericalSemigroup> {
    SplitMix64 rng(s);
    std::vector<std::vector<Rat>> coeffs(n);
    for (long i = 0; i < n; ++i) {
      coeffs[i].assign(h + 1, Rat(0));
      coeffs[i][p.k[i]] = 1;
      for (long l = p.k[i] + 1; l <= h; ++l)
        coeffs[i][l] = rng.rat_coefficient();
    }
    return value_semigroup_of_series(coeffs, p.k, h);
  };

  GenericSemigroupResult out;
  out.profile = p;
  while (true) {
    std::uint64_t s1 = derive_seed(seed, 1), s2 = derive_seed(seed, 2);
    auto S1 = attempt(s1, horizon);
    auto S2 = attempt(s2, horizon);
    if (!S1 || !S2) {
      if (horizon >= horizon_cap)
        throw std::runtime_error("truncation bound exceeded");
      horizon = std::min(2 * horizon, horizon_cap);
      continue;
    }
    out.seeds_used = {s1, s2};
    if (*S1 == *S2) {
      out.computed = *S1;
      out.stable = true;
    } else {
      std::uint64_t s3 = derive_seed(seed, 3);
      auto S3 = attempt(s3, horizon);
      out.seeds_used.push_back(s3);
      if (S3 && (*S3 == *S1 || *S3 == *S2)) {
        out.computed = *S3;
        out.stable = true;
      } else {
        throw std::runtime_error("generic semigroup undetermined");
      }
    }
    break;
  }

  long r_P = 0;
  for (long i = 0; i < n; ++i) r_P += p.k[i] - (i + 1);
  out.r_P_minus_1 = r_P - 1;
  out.baseline = (n - 2) * out.computed->genus();
  out.excess = out.r_P_minus_1 < out.baseline;
  return out;
}

NumericalSemigroup closed_form_n3(long m) {
  if (m < 1) throw std::invalid_argument("closed_form_n3 requires m >= 1");
  long odd_gen = (m % 2 == 0) ? m * (m + 2) + 1 : m * (m + 3) + 1;
  return NumericalSemigroup::from_generators(
      {2 * m, 2 * m + 2, 2 * m + 4, 4 * m + 5, odd_gen});
}

std::vector<long> generic_gap_lower_bound(long n, long m) {
  if (n < 4 || m < n + 1)
    throw std::invalid_argument(
        "gap lower bound requires n >= 4 and m >= n+1");
  std::vector<long> out;
  for (long v = 1; v <= 2 * m - 1; ++v) out.push_back(v);
  for (long v = 2 * m + 1; v <= 4 * m + 3; v += 2) out.push_back(v);
  for (long v = 2 * m + 2 * n; v <= 4 * m - 2; v += 2) out.push_back(v);
  for (long v = 4 * m + 4 * n - 5; v <= 6 * m + 3; v += 2) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExcessCheck generic_excess_check(long n, long m) {
  if (n < 3) throw std::invalid_argument("excess check requires n >= 3");
  ExcessCheck out;
  if (n == 3) {
    out.lhs = Rat(6 * m - 1);
    out.rhs = Rat(m * m + 4 * m) / 2 - (m % 2 == 0 ? Rat(1) : Rat(3) / 2);
  } else {
    out.lhs = Rat(2 * m * n + (n - 1) * (n - 2) / 2 - 1);
    out.rhs = Rat((n - 2) * (5 * m - 3 * n + 6));
  }
  out.excess = out.lhs < out.rhs;
  return out;
}

}  // namespace severi
