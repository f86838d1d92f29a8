#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "shilab/ideals.hpp"

using namespace shilab;

TEST_CASE("antichain construction and validation") {
  RootSystem rs(CartanType::parse("A3"));
  RootSet s;
  s.set(rs.parse_root("e12").index);
  s.set(rs.parse_root("e34").index);
  Antichain a = make_antichain(rs, s);
  CHECK(a.roots.count() == 2);

  s.set(rs.parse_root("e14").index);  // e12 <= e14: no longer an antichain
  try {
    make_antichain(rs, s);
    FAIL("expected NotAnAntichain");
  } catch (const NotAnAntichain& e) {
    CHECK(e.lower == rs.parse_root("e12").index);
    CHECK(e.upper == rs.parse_root("e14").index);
    CHECK(std::string(e.what()).find("e12") != std::string::npos);
    CHECK(std::string(e.what()).find("e14") != std::string::npos);
  }
}

TEST_CASE("up closure and minimal elements invert each other") {
  RootSystem rs(CartanType::parse("A3"));
  RootSet s;
  s.set(rs.parse_root("e23").index);
  Antichain a = make_antichain(rs, s);
  RootIdeal ideal = up_closure(rs, a);
  // e23 is below e13, e24, e14
  CHECK(ideal.roots.count() == 4);
  CHECK(ideal.roots.test(rs.parse_root("e13").index));
  CHECK(ideal.roots.test(rs.parse_root("e24").index));
  CHECK(ideal.roots.test(rs.parse_root("e14").index));
  CHECK_FALSE(ideal.roots.test(rs.parse_root("e12").index));
  CHECK(is_up_closed(rs, ideal.roots));
  CHECK(minimal_elements(rs, ideal).roots == a.roots);

  RootSet not_closed;
  not_closed.set(rs.parse_root("e23").index);
  CHECK_FALSE(is_up_closed(rs, not_closed));
  CHECK_THROWS_AS(make_ideal(rs, not_closed), ConstructionError);
}

TEST_CASE("ideal counts match the classical product formulas") {
  // type -> expected number of up-closed sets (antichains)
  const std::map<std::string, long long> expected{
      {"A1", 2},  {"A2", 5},   {"A3", 14},  {"A4", 42},  {"A5", 132}, {"A6", 429},
      {"B2", 6},  {"B3", 20},  {"B4", 70},  {"C2", 6},   {"C3", 20},  {"C4", 70},
      {"D4", 50}, {"G2", 8},   {"F4", 105}, {"E6", 833}};
  for (const auto& [name, count] : expected) {
    RootSystem rs(CartanType::parse(name));
    INFO(name);
    if (rs.num_positive() <= 24) {  // keep the D/F/E checks to the formulas
      auto ideals = enumerate_ideals(rs);
      auto antichains = enumerate_antichains(rs);
      CHECK(static_cast<long long>(ideals.size()) == count);
      CHECK(static_cast<long long>(antichains.size()) == count);
      // the enumerations align index-by-index
      for (std::size_t i = 0; i < ideals.size(); ++i) {
        CHECK(up_closure(rs, antichains[i]).roots == ideals[i].roots);
        CHECK(minimal_elements(rs, ideals[i]).roots == antichains[i].roots);
      }
      // no duplicates, empty first, full ideal present
      std::set<RootSet> seen;
      for (const RootIdeal& id : ideals) CHECK(seen.insert(id.roots).second);
      CHECK(ideals.front().roots.empty());
      CHECK(seen.count(full_ideal(rs).roots) == 1);
    }
    CHECK(catalan_product(rs) == count);
    CHECK(cellini_papi_count(rs) == count);
    if (rs.cartan().family == Family::A || rs.cartan().family == Family::B ||
        rs.cartan().family == Family::C || rs.cartan().family == Family::D)
      CHECK(mu_formula(rs.cartan()) == count);
  }
  CHECK_THROWS_AS(mu_formula(CartanType::parse("G2")), UnsupportedFormula);
  CHECK_THROWS_AS(mu_formula(CartanType::parse("E6")), UnsupportedFormula);
}

TEST_CASE("enumeration order is deterministic") {
  RootSystem rs(CartanType::parse("B2"));
  auto first = enumerate_ideals(rs);
  auto second = enumerate_ideals(rs);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i].roots == second[i].roots);
}

TEST_CASE("bracket of root sets") {
  RootSystem rs(CartanType::parse("A2"));
  RootSet a, b;
  a.set(0);  // alpha1
  b.set(1);  // alpha2
  RootSet c = bracket(rs, a, b);
  CHECK(c.count() == 1);
  CHECK(c.test(rs.highest_root_index()));
  CHECK(bracket(rs, a, a).empty());
}

TEST_CASE("ideal powers descend and sit above height k") {
  RootSystem rs(CartanType::parse("G2"));
  RootIdeal full = full_ideal(rs);
  auto powers = ideal_powers(rs, full);
  std::vector<std::size_t> sizes;
  for (const RootSet& p : powers) sizes.push_back(p.count());
  CHECK(sizes == std::vector<std::size_t>{6, 4, 3, 2, 1});
  for (std::size_t k = 1; k < powers.size(); ++k)
    CHECK(powers[k - 1].contains_all(powers[k]));
  // the k-th power consists of k-fold sums, which forces height >= k
  for (std::size_t k = 0; k < powers.size(); ++k)
    for (int r = powers[k].next(0); r >= 0; r = powers[k].next(r + 1))
      CHECK(rs.height(r) >= static_cast<int>(k) + 1);
  CHECK(ideal_power(rs, full, 3) == powers[2]);
  CHECK(ideal_power(rs, full, 99).empty());

  // powers of a non-full ideal in A3
  RootSystem a3(CartanType::parse("A3"));
  RootSet s;
  s.set(a3.parse_root("e23").index);
  RootIdeal ideal = up_closure(a3, make_antichain(a3, s));
  auto ps = ideal_powers(a3, ideal);
  REQUIRE(ps.size() == 1);  // the staircase shape has no internal sums
  CHECK(ps[0] == ideal.roots);
}

TEST_CASE("l_set layers the powers with ascending delta levels") {
  RootSystem rs(CartanType::parse("A2"));
  auto ls = l_set(rs, full_ideal(rs));
  REQUIRE(ls.size() == 4);
  // k=1 layer: d - each of the three positives; k=2: 2d - theta
  CHECK(ls[0] == parse_affine_root(rs, "d-e12"));
  CHECK(ls[1] == parse_affine_root(rs, "d-e23"));
  CHECK(ls[2] == parse_affine_root(rs, "d-e13"));
  CHECK(ls[3] == AffineRoot(rs.parse_root("e31"), 2));
  for (const AffineRoot& r : ls) {
    CHECK(r.positive());
    CHECK(r.finite.negative);
  }

  // the l_set of the empty ideal is empty
  CHECK(l_set(rs, RootIdeal{}).empty());
}

TEST_CASE("binomials used by the closed-form counts") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(14, 7) == 3432);
  CHECK(binomial(3, 5) == 0);
}
