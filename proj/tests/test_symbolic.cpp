#include "severi/symbolic.hpp"

#include <map>
#include <set>

#include "doctest.h"

using namespace severi;

namespace {

std::string poly_str(const ConditionLedger& led, const Poly& p) {
  return p.to_string([&](VarId v) { return led.map.var_name(v); });
}

long count_for_column(const ConditionLedger& led, long s) {
  long c = 0;
  for (const auto& e : led.entries)
    if (e.column_s == s) ++c;
  return c;
}

}  // namespace

TEST_CASE("hyperelliptic conditions for g=7, k=(2,4,6,8)") {
  auto p = RamificationProfile::of({2, 4, 6, 8});
  auto led = hyperelliptic_conditions(7, p);
  CHECK(led.entries.size() == 12);  // sum (g - k_i/2) = 5+4+3
  CHECK(led.independent_count == 12);

  // first condition of the k=4 column sits at gap 5 and reads a_2_5 - 2*a_1_3
  const Condition& first = led.entries.front();
  CHECK(first.column_s == 4);
  CHECK(first.gap_q == 5);
  CHECK(poly_str(led, first.numerator) == "-2*a_1_3 + a_2_5");

  // triangularity: the fresh variable a_{i, q} appears with coefficient 1
  for (const auto& cond : led.entries) {
    int series = -1;
    for (int i = 1; i < p.n(); ++i)
      if (p.k[i] == cond.column_s) series = i;
    REQUIRE(series >= 0);
    auto v = led.map.var(series, cond.gap_q);
    REQUIRE(v.has_value());
    auto [a, b] = cond.numerator.split_affine(*v);
    CHECK(a == Poly::constant(Rat(1)));
    // every gap recorded is a gap below the conductor
    CHECK(cond.gap_q % 2 == 1);
    CHECK(cond.gap_q < 14);
  }
}

TEST_CASE("hyperelliptic condition counts over a small grid") {
  for (long g = 4; g <= 7; ++g)
    for (long n = 3; n <= g - 1; ++n) {
      std::vector<long> entries;
      for (long j = 1; j <= n; ++j) entries.push_back(2 * j);
      auto led = hyperelliptic_conditions(g, RamificationProfile::of(entries));
      long expected = 0;
      for (long i = 2; i <= n; ++i) expected += g - i;
      CHECK(static_cast<long>(led.entries.size()) == expected);
      CHECK(led.independent_count == expected);
    }
  CHECK_THROWS_AS(hyperelliptic_conditions(7, RamificationProfile::of({2, 5})),
                  std::invalid_argument);
}

TEST_CASE("walk_columns on the instructive example") {
  auto S = NumericalSemigroup::from_generators({8, 10, 12, 25, 29});
  auto p = RamificationProfile::of({8, 10, 12});
  auto led = walk_columns(S, p, 42);
  CHECK(led.independent_count == 3);
  CHECK(count_for_column(led, 20) == 2);
  CHECK(count_for_column(led, 24) == 1);
  // columns 20 and 24 both sacrifice: pivots registered at 25 and 29
  CHECK(led.registry_valuations == std::vector<long>{25, 29});
  std::map<long, long> sac;
  for (const auto& w : led.walks)
    if (w.sacrificed) sac[w.column_s] = w.sacrifice_valuation;
  CHECK(sac == std::map<long, long>{{20, 25}, {24, 29}});
  // gaps recorded: 21, 23 from column 20; 27 from column 24
  std::multiset<long> gaps;
  for (const auto& e : led.entries) gaps.insert(e.gap_q);
  CHECK(gaps == std::multiset<long>{21, 23, 27});
  for (const auto& e : led.entries) {
    CHECK(!S.contains(e.gap_q));
    CHECK(e.gap_q < S.conductor());
  }
}

TEST_CASE("walk_columns on <4,10,15> reproduces the seven conditions") {
  auto S = NumericalSemigroup::from_generators({4, 10, 15});
  auto p = RamificationProfile::of({4, 8, 10, 12});
  auto led = walk_columns(S, p, 42);
  CHECK(led.independent_count == 7);
  // gap layout of the table: 9, 11, 13 (twice), 17, 21 (twice)
  std::multiset<long> gaps;
  for (const auto& e : led.entries) gaps.insert(e.gap_q);
  CHECK(gaps == std::multiset<long>{9, 11, 13, 13, 17, 21, 21});
  // the column-8 walk is sacrificed at 15 (the missing generator)
  std::map<long, long> sac;
  for (const auto& w : led.walks)
    if (w.sacrificed) sac[w.column_s] = w.sacrifice_valuation;
  CHECK(sac == std::map<long, long>{{8, 15}});
  // triangularity within each walk: a fresh variable with nonzero
  // coefficient absent from every earlier condition of the same walk
  std::map<std::pair<long, int>, std::set<VarId>> seen;
  for (const auto& cond : led.entries) {
    auto key = std::make_pair(cond.column_s, cond.class_index);
    bool fresh_found = false;
    std::set<VarId> support;
    cond.numerator.collect_vars(support);
    for (int i = 0; i < p.n(); ++i) {
      auto v = led.map.var(i, p.k[i] + cond.fresh_weight);
      if (!v) continue;
      if (support.count(*v) && !seen[key].count(*v)) fresh_found = true;
    }
    CHECK(fresh_found);
    cond.numerator.collect_vars(seen[key]);
  }
}

TEST_CASE("walk_columns agrees with hyperelliptic_conditions on <2,15>") {
  auto S = NumericalSemigroup::from_generators({2, 15});
  auto p = RamificationProfile::of({2, 4, 6, 8});
  auto led = walk_columns(S, p, 42);
  auto hyp = hyperelliptic_conditions(7, p);
  CHECK(led.independent_count == 12);
  CHECK(led.independent_count == hyp.independent_count);
}

TEST_CASE("ledger determinism for a fixed seed") {
  auto S = NumericalSemigroup::from_generators({4, 10, 15});
  auto p = RamificationProfile::of({4, 8, 10, 12});
  auto a = walk_columns(S, p, 7);
  auto b = walk_columns(S, p, 7);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].gap_q == b.entries[i].gap_q);
    CHECK(a.entries[i].column_s == b.entries[i].column_s);
    CHECK(a.entries[i].numerator == b.entries[i].numerator);
  }
  CHECK(a.independent_count == b.independent_count);
}

TEST_CASE("walk_columns rejects profiles outside S") {
  auto S = NumericalSemigroup::from_generators({4, 10, 15});
  CHECK_THROWS_AS(walk_columns(S, RamificationProfile::of({4, 9}), 1),
                  std::invalid_argument);
}

TEST_CASE("certify_stratum: hyperelliptic g=7, n=4") {
  auto S = NumericalSemigroup::from_generators({2, 15});
  auto p = RamificationProfile::of({2, 4, 6, 8});
  auto cert = certify_stratum(S, p, 42);
  REQUIRE(cert.exact);
  CHECK(cert.status == "exact");
  CHECK(cert.codimension == 21);
  REQUIRE(cert.witness_semigroup.has_value());
  CHECK(*cert.witness_semigroup == S);
}

TEST_CASE("certify_stratum: flagship <4,10,15>") {
  auto S = NumericalSemigroup::from_generators({4, 10, 15});
  auto p = RamificationProfile::of({4, 8, 10, 12});
  auto cert = certify_stratum(S, p, 42);
  REQUIRE(cert.exact);
  CHECK(cert.codimension == 30);
}

TEST_CASE("certify_stratum: instructive example") {
  auto S = NumericalSemigroup::from_generators({8, 10, 12, 25, 29});
  auto p = RamificationProfile::of({8, 10, 12});
  auto cert = certify_stratum(S, p, 42);
  REQUIRE(cert.exact);
  CHECK(cert.codimension == 26);
}

TEST_CASE("certify_stratum: minimal weight (6,5,21), codimension 83") {
  auto S = min_weight_gamma_semigroup(21, 5);
  auto p = RamificationProfile::of({12, 14, 16, 18, 20, 22});
  auto cert = certify_stratum(S, p, 42);
  REQUIRE(cert.exact);
  CHECK(cert.codimension == 83);
}

TEST_CASE("certificates are seed independent") {
  auto S = NumericalSemigroup::from_generators({4, 10, 15});
  auto p = RamificationProfile::of({4, 8, 10, 12});
  auto a = certify_stratum(S, p, 1);
  auto b = certify_stratum(S, p, 999);
  CHECK(a.exact);
  CHECK(b.exact);
  CHECK(a.codimension == b.codimension);
}
