#include "severi/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace severi {

RamificationProfile RamificationProfile::of(std::vector<long> entries) {
  if (entries.empty())
    throw std::invalid_argument("ramification profile must be nonempty");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] <= 0)
      throw std::invalid_argument("profile entries must be positive");
    if (i > 0 && entries[i] <= entries[i - 1])
      throw std::invalid_argument("profile must be strictly increasing");
  }
  return RamificationProfile{std::move(entries)};
}

bool RamificationProfile::has_entry(long v) const {
  return std::binary_search(k.begin(), k.end(), v);
}

namespace {

void enumerate(long s, const std::vector<long>& k, std::size_t i,
               std::vector<long>& cur, std::vector<Decomposition>& out) {
  if (i + 1 == k.size()) {
    if (s % k[i] == 0) {
      cur[i] = s / k[i];
      out.push_back({cur, 0});
      cur[i] = 0;
    }
    return;
  }
  for (long m = 0; m * k[i] <= s; ++m) {
    cur[i] = m;
    enumerate(s - m * k[i], k, i + 1, cur, out);
  }
  cur[i] = 0;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Decomposition> all_decompositions(long s,
                                              const RamificationProfile& p) {
  std::vector<Decomposition> out;
  if (s <= 0) return out;
  std::vector<long> cur(p.k.size(), 0);
  enumerate(s, p.k, 0, cur, out);
  for (auto& d : out) d.value = s;
  std::sort(out.begin(), out.end(),
            [](const Decomposition& a, const Decomposition& b) {
              return a.exponents < b.exponents;
            });
  return out;
}

DecompositionClassSet classify(long s, const RamificationProfile& p) {
  DecompositionClassSet cs;
  cs.s = s;
  auto decomps = all_decompositions(s, p);
  if (decomps.empty()) return cs;

  std::map<std::vector<long>, int> index;
  for (std::size_t i = 0; i < decomps.size(); ++i)
    index.emplace(decomps[i].exponents, static_cast<int>(i));

  // Decompositions of proper sub-sums, cached per value.
  std::map<long, std::vector<Decomposition>> sub_cache;
  auto subs_of = [&](long v) -> const std::vector<Decomposition>& {
    auto it = sub_cache.find(v);
    if (it == sub_cache.end())
      it = sub_cache.emplace(v, all_decompositions(v, p)).first;
    return it->second;
  };

  UnionFind uf(static_cast<int>(decomps.size()));
  const int n = p.n();
  for (std::size_t di = 0; di < decomps.size(); ++di) {
    const auto& d = decomps[di].exponents;
    // Iterate proper nonempty sub-vectors u <= d componentwise.
    std::vector<long> u(n, 0);
    while (true) {
      int pos = 0;
      while (pos < n && u[pos] == d[pos]) u[pos++] = 0;
      if (pos == n) break;
      ++u[pos];
      bool proper = false, nonempty = false;
      for (int i = 0; i < n; ++i) {
        if (u[i] > 0) nonempty = true;
        if (u[i] < d[i]) proper = true;
      }
      if (!nonempty || !proper) continue;
      long v = 0;
      for (int i = 0; i < n; ++i) v += u[i] * p.k[i];
      for (const auto& w : subs_of(v)) {
        if (w.exponents == u) continue;
        std::vector<long> rewired(n);
        for (int i = 0; i < n; ++i)
          rewired[i] = d[i] - u[i] + w.exponents[i];
        uf.unite(static_cast<int>(di), index.at(rewired));
      }
    }
  }

  std::map<int, std::vector<Decomposition>> grouped;
  for (std::size_t i = 0; i < decomps.size(); ++i)
    grouped[uf.find(static_cast<int>(i))].push_back(decomps[i]);

  for (auto& [root, members] : grouped) cs.classes.push_back(std::move(members));
  // Members are already lex-sorted (decomps was); classes sort by their
  // smallest member, the representative.
  std::sort(cs.classes.begin(), cs.classes.end(),
            [](const auto& a, const auto& b) {
              return a.front().exponents < b.front().exponents;
            });
  for (const auto& c : cs.classes) cs.representatives.push_back(c.front());
  cs.psi = static_cast<int>(cs.classes.size());
  cs.phi = std::max(cs.psi - 1, 0);
  return cs;
}

void require_profile_in(const NumericalSemigroup& S,
                        const RamificationProfile& p) {
  for (long ki : p.k)
    if (!S.contains(ki))
      throw std::invalid_argument("profile not realizable in S");
}

std::vector<PhiRhoRow> phi_rho_table(const NumericalSemigroup& S,
                                     const RamificationProfile& p) {
  require_profile_in(S, p);
  std::vector<PhiRhoRow> rows;
  long g = S.genus();
  for (long s = 1; s <= 2 * g; ++s) {
    if (!S.contains(s)) continue;
    PhiRhoRow row;
    row.s = s;
    row.phi = classify(s, p).phi;
    row.rho = S.rho(s);
    row.inert = (row.phi == 0 || row.rho == 0);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace severi
