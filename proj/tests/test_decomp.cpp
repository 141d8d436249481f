#include "severi/decomp.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "severi/rng.hpp"

using namespace severi;

namespace {

std::vector<long> exps(std::initializer_list<long> v) { return v; }

// Independent oracle: explicit symmetric rewrite graph on all decompositions
// with reachability by repeated matrix squaring, no union-find and no shared
// code path with classify().
int brute_force_class_count(long s, const RamificationProfile& p) {
  auto decomps = all_decompositions(s, p);
  const int n = p.n();
  const int m = static_cast<int>(decomps.size());
  if (m == 0) return 0;
  std::map<std::vector<long>, int> idx;
  for (int i = 0; i < m; ++i) idx[decomps[i].exponents] = i;

  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) adj[i][i] = 1;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      // a -> b by replacing a proper nonempty sub-vector u of a with a
      // different decomposition w of the same value so that a - u + w = b.
      const auto& da = decomps[a].exponents;
      const auto& db = decomps[b].exponents;
      std::vector<long> u(n, 0);
      bool linked = false;
      while (!linked) {
        int pos = 0;
        while (pos < n && u[pos] == da[pos]) u[pos++] = 0;
        if (pos == n) break;
        ++u[pos];
        bool nonempty = false, proper = false;
        long val = 0;
        for (int i = 0; i < n; ++i) {
          if (u[i] > 0) nonempty = true;
          if (u[i] < da[i]) proper = true;
          val += u[i] * p.k[i];
        }
        if (!nonempty || !proper) continue;
        // w = b - (a - u) must be a valid decomposition of val, != u.
        std::vector<long> w(n);
        bool ok = true;
        long wval = 0;
        for (int i = 0; i < n; ++i) {
          w[i] = db[i] - (da[i] - u[i]);
          if (w[i] < 0) ok = false;
          wval += (ok ? w[i] * p.k[i] : 0);
        }
        if (ok && wval == val && w != u) linked = true;
      }
      if (linked) adj[a][b] = adj[b][a] = 1;
    }
  // transitive closure
  for (int runs = 0; runs < m; ++runs) {
    bool changed = false;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (adj[i][j])
          for (int t = 0; t < m; ++t)
            if (adj[j][t] && !adj[i][t]) {
              adj[i][t] = 1;
              changed = true;
            }
    if (!changed) break;
  }
  std::set<int> roots;
  for (int i = 0; i < m; ++i) {
    int r = i;
    for (int j = 0; j < m; ++j)
      if (adj[i][j] && j < r) r = j;
    roots.insert(r);
  }
  return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("all_decompositions on stated cases") {
  auto p = RamificationProfile::of({8, 10, 12});
  auto d = all_decompositions(24, p);
  REQUIRE(d.size() == 2);
  CHECK(d[0].exponents == exps({0, 0, 2}));
  CHECK(d[1].exponents == exps({3, 0, 0}));
  CHECK(d[0].value == 24);

  CHECK(all_decompositions(0, p).empty());

  auto p7 = RamificationProfile::of({7, 8, 9, 10, 11, 12, 13});
  auto d23 = all_decompositions(23, p7);
  // partitions (13,10), (12,11), (9,7,7), (8,8,7)
  CHECK(d23.size() == 4);
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(RamificationProfile::of({4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(RamificationProfile::of({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(RamificationProfile::of({}), std::invalid_argument);
}

TEST_CASE("classify: the psi(23) footnote case") {
  auto p = RamificationProfile::of({7, 8, 9, 10, 11, 12, 13});
  auto cs = classify(23, p);
  CHECK(cs.psi == 3);
  CHECK(cs.phi == 2);
  // 8+8+7 = 7+7+9 is one class; (13,10) and (12,11) are singletons.
  std::multiset<std::size_t> sizes;
  for (const auto& c : cs.classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 2});
}

TEST_CASE("classify: 28 in <8,10,12> has a single class") {
  auto p = RamificationProfile::of({8, 10, 12});
  auto cs = classify(28, p);
  CHECK(cs.psi == 1);
  CHECK(cs.phi == 0);
  CHECK(cs.classes.front().size() == 2);  // (8,8,12) ~ (8,10,10)
}

TEST_CASE("classify: s = 8*gamma+4 for the max-weight profile") {
  for (long gamma = 1; gamma <= 4; ++gamma) {
    auto p =
        RamificationProfile::of({4, 4 * gamma + 2, 8 * gamma + 4});
    auto cs = classify(8 * gamma + 4, p);
    CHECK(cs.psi == 3);
    CHECK(cs.phi == 2);
  }
}

TEST_CASE("classify: unique decomposition means psi = 1") {
  auto p = RamificationProfile::of({8, 10, 12});
  auto cs = classify(10, p);
  CHECK(cs.psi == 1);
  CHECK(cs.phi == 0);
  CHECK(cs.representatives.front().exponents == exps({0, 1, 0}));
}

TEST_CASE("classify: scaling invariance") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<long> base;
    long start = 2 + rng.next() % 6;
    base.push_back(start);
    base.push_back(start + 1 + rng.next() % 3);
    base.push_back(base[1] + 1 + rng.next() % 3);
    long scale = 2 + rng.next() % 3;
    auto p = RamificationProfile::of(base);
    std::vector<long> scaled;
    for (long v : base) scaled.push_back(v * scale);
    auto ps = RamificationProfile::of(scaled);
    for (long s = 1; s <= 3 * base.back(); ++s) {
      auto a = classify(s, p);
      auto b = classify(s * scale, ps);
      CHECK(a.psi == b.psi);
      CHECK(a.phi == b.phi);
    }
  }
}

TEST_CASE("classify agrees with the brute-force closure oracle") {
  std::vector<std::vector<long>> profiles = {
      {2, 4, 6, 8}, {4, 8, 10, 12}, {8, 10, 12}, {7, 8, 9, 13},
      {3, 5, 7},    {6, 7, 8, 9},   {5, 9, 11},  {4, 6, 7}};
  for (const auto& entries : profiles) {
    auto p = RamificationProfile::of(entries);
    for (long s = 1; s <= 3 * p.max(); ++s) {
      auto cs = classify(s, p);
      CHECK(cs.psi == brute_force_class_count(s, p));
      if (cs.psi > 0) {
        // classes partition the decomposition set
        std::size_t total = 0;
        for (const auto& c : cs.classes) total += c.size();
        CHECK(total == all_decompositions(s, p).size());
        // representative is lex-smallest in its class and classes sorted
        for (std::size_t i = 0; i < cs.classes.size(); ++i) {
          for (const auto& d : cs.classes[i])
            CHECK(!(d.exponents < cs.representatives[i].exponents));
          if (i > 0)
            CHECK(cs.representatives[i - 1].exponents <
                  cs.representatives[i].exponents);
        }
      }
    }
  }
}

TEST_CASE("phi_rho_table on the instructive example") {
  auto S = NumericalSemigroup::from_generators({8, 10, 12, 25, 29});
  auto p = RamificationProfile::of({8, 10, 12});
  auto rows = phi_rho_table(S, p);
  std::vector<PhiRhoRow> active;
  for (const auto& r : rows)
    if (!r.inert) active.push_back(r);
  REQUIRE(active.size() == 2);
  CHECK(active[0].s == 20);
  CHECK(active[0].phi == 1);
  CHECK(active[0].rho == 4);
  CHECK(active[1].s == 24);
  CHECK(active[1].phi == 1);
  CHECK(active[1].rho == 2);
}

TEST_CASE("phi_rho_table on <2,15> with (2,4,6,8)") {
  auto S = NumericalSemigroup::from_generators({2, 15});
  auto p = RamificationProfile::of({2, 4, 6, 8});
  auto rows = phi_rho_table(S, p);
  std::vector<std::vector<long>> active;
  long total = 0;
  for (const auto& r : rows)
    if (!r.inert) {
      active.push_back({r.s, static_cast<long>(r.phi), r.rho});
      total += r.phi * r.rho;
    }
  CHECK(active == std::vector<std::vector<long>>{{4, 1, 5}, {6, 1, 4}, {8, 1, 3}});
  CHECK(total == 12);
}

TEST_CASE("phi_rho_table rejects unrealizable profiles") {
  auto S = NumericalSemigroup::from_generators({8, 10, 12, 25, 29});
  CHECK_THROWS_WITH_AS(phi_rho_table(S, RamificationProfile::of({8, 9, 10})),
                       "profile not realizable in S", std::invalid_argument);
}

TEST_CASE("phi_rho_table on the full naturals is all inert") {
  auto S = NumericalSemigroup::from_generators({1});
  auto rows = phi_rho_table(S, RamificationProfile::of({1}));
  for (const auto& r : rows) CHECK(r.inert);
}
