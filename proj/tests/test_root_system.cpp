#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "shilab/root_system.hpp"

using namespace shilab;

namespace {

Vec v3(int a, int b, int c) { return Vec{Rat(a), Rat(b), Rat(c)}; }

/// Independent dominance-order oracle: a <= b iff some chain
/// a = c_0, c_1, ..., c_t = b exists with every step c_{i+1} - c_i a
/// positive root.  Memoized DFS over the sum table.
bool chain_leq(const RootSystem& rs, int a, int b, std::map<std::pair<int, int>, bool>& memo) {
  if (a == b) return true;
  auto it = memo.find({a, b});
  if (it != memo.end()) return it->second;
  memo[{a, b}] = false;  // cut cycles (there are none, heights increase)
  bool ok = false;
  for (int step = 0; step < rs.num_positive() && !ok; ++step) {
    auto next = rs.add_roots(a, step);
    if (next && chain_leq(rs, *next, b, memo)) ok = true;
  }
  memo[{a, b}] = ok;
  return ok;
}

}  // namespace

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootSystem(CartanType{Family::D, 2}), ConstructionError);
  CHECK_THROWS_AS(RootSystem(CartanType{Family::E, 9}), ConstructionError);
  CHECK_THROWS_AS(RootSystem(CartanType{Family::F, 3}), ConstructionError);
  CHECK_THROWS_AS(RootSystem(CartanType{Family::G, 3}), ConstructionError);
  CHECK_THROWS_AS(RootSystem(CartanType{Family::B, 1}), ConstructionError);
  CHECK_THROWS_AS(RootSystem(CartanType{Family::A, 16}), ConstructionError);
  CHECK_THROWS_AS(CartanType::parse("H3"), ConstructionError);
  CHECK_THROWS_AS(CartanType::parse("A"), ConstructionError);
  CHECK(CartanType::parse("a3") == CartanType::parse("A", 3));
}

TEST_CASE("A2 positive roots") {
  RootSystem rs(CartanType::parse("A2"));
  REQUIRE(rs.num_positive() == 3);
  CHECK(rs.root(0).ambient == v3(1, -1, 0));
  CHECK(rs.root(1).ambient == v3(0, 1, -1));
  CHECK(rs.root(2).ambient == v3(1, 0, -1));
  CHECK(rs.highest_root_index() == 2);
  CHECK(rs.coxeter_number() == 3);
  CHECK(rs.height(2) == 2);
  CHECK(rs.exponents() == std::vector<int>{1, 2});
  CHECK(rs.weyl_order() == 6);

  CHECK(rs.inner(0, 0) == 2);
  CHECK(rs.inner(0, 1) == -1);
  CHECK(rs.inner(0, 2) == 1);

  // alpha1 + alpha2 = theta; theta + anything is out.
  CHECK(rs.add_roots(0, 1) == 2);
  CHECK_FALSE(rs.add_roots(0, 0).has_value());
  CHECK_FALSE(rs.add_roots(0, 2).has_value());
}

TEST_CASE("A3 canonical order matches the e_ij staircase") {
  RootSystem rs(CartanType::parse("A3"));
  REQUIRE(rs.num_positive() == 6);
  std::vector<std::string> names;
  for (int r = 0; r < 6; ++r) names.push_back(rs.root_name(r));
  CHECK(names == std::vector<std::string>{"e12", "e23", "e34", "e13", "e24", "e14"});
  CHECK(rs.parse_root("e24") == FiniteRoot(4, false));
  CHECK(rs.parse_root("e42") == FiniteRoot(4, true));
  CHECK_THROWS_AS(rs.parse_root("e11"), FormatError);
  CHECK_THROWS_AS(rs.parse_root("e15"), FormatError);
  CHECK_THROWS_AS(rs.parse_root("x"), FormatError);
  CHECK(rs.parse_root("[0,1,1]") == FiniteRoot(4, false));
  CHECK(rs.parse_root("[0,-1,-1]") == FiniteRoot(4, true));

  // e12 . e34 = 0, e12 . e23 = -1
  CHECK(rs.inner(0, 2) == 0);
  CHECK(rs.inner(0, 1) == -1);

  CHECK(rs.poset_leq(1, 5));        // e23 <= e14
  CHECK_FALSE(rs.poset_leq(0, 2));  // e12 vs e34 incomparable
  CHECK(rs.poset_leq(3, 3));
}

TEST_CASE("B2 and C2 follow their ambient models") {
  RootSystem b2(CartanType::parse("B2"));
  REQUIRE(b2.num_positive() == 4);
  // order: alpha1 = e1-e2, alpha2 = e2, then e1, then e1+e2
  CHECK(b2.root(0).ambient == Vec{Rat(1), Rat(-1)});
  CHECK(b2.root(1).ambient == Vec{Rat(0), Rat(1)});
  CHECK(b2.root(2).ambient == Vec{Rat(1), Rat(0)});
  CHECK(b2.root(3).ambient == Vec{Rat(1), Rat(1)});
  CHECK(b2.coxeter_number() == 4);
  CHECK(b2.exponents() == std::vector<int>{1, 3});

  // Short roots have squared length 1 here, so their coroots double.
  CHECK(b2.coroot_ambient(0) == Vec{Rat(1), Rat(-1)});
  CHECK(b2.coroot_ambient(1) == Vec{Rat(0), Rat(2)});
  CHECK(b2.coroot_coords(3) == std::vector<int>{1, 1});  // (e1+e2)^vee
  CHECK(b2.squared_length(1) == 1);
  CHECK(b2.squared_length(0) == 2);

  // In type C the long roots are the doubled ones and their coroots halve.
  RootSystem c2(CartanType::parse("C2"));
  REQUIRE(c2.num_positive() == 4);
  int long_idx = c2.highest_root_index();
  CHECK(c2.root(long_idx).ambient == Vec{Rat(2), Rat(0)});
  CHECK(c2.coroot_ambient(long_idx) == Vec{Rat(1), Rat(0)});
  CHECK(c2.squared_length(long_idx) == 4);
}

TEST_CASE("G2 and F4 sizes, heights, exponents") {
  RootSystem g2(CartanType::parse("G2"));
  CHECK(g2.num_positive() == 6);
  CHECK(g2.coxeter_number() == 6);
  CHECK(g2.highest_root().height == 5);
  CHECK(g2.exponents() == std::vector<int>{1, 5});
  CHECK(g2.highest_root().simple == std::vector<int>{3, 2});

  RootSystem f4(CartanType::parse("F4"));
  CHECK(f4.num_positive() == 24);
  CHECK(f4.coxeter_number() == 12);
  CHECK(f4.exponents() == std::vector<int>{1, 5, 7, 11});
  CHECK(f4.weyl_order() == 1152);
}

TEST_CASE("exceptional E systems") {
  RootSystem e6(CartanType::parse("E6"));
  CHECK(e6.num_positive() == 36);
  CHECK(e6.coxeter_number() == 12);
  CHECK(e6.ambient_dim() == 8);
  CHECK(e6.exponents() == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(e6.weyl_order() == 51840);

  RootSystem e7(CartanType::parse("E7"));
  CHECK(e7.num_positive() == 63);
  CHECK(e7.coxeter_number() == 18);
  CHECK(e7.exponents() == std::vector<int>{1, 5, 7, 9, 11, 13, 17});

  RootSystem e8(CartanType::parse("E8"));
  CHECK(e8.num_positive() == 120);
  CHECK(e8.coxeter_number() == 30);
  CHECK(e8.exponents() == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(e8.weyl_order() == 696729600);
}

TEST_CASE("|Phi+| = rank * h / 2 and exponent sum across families") {
  for (const char* name : {"A1", "A4", "B3", "B5", "C3", "C5", "D3", "D4", "D6", "E6", "E7",
                           "E8", "F4", "G2"}) {
    RootSystem rs(CartanType::parse(name));
    INFO(name);
    CHECK(2 * rs.num_positive() == rs.rank() * rs.coxeter_number());
    long long es = 0;
    for (int e : rs.exponents()) es += e;
    CHECK(es == rs.num_positive());
    CHECK(rs.coxeter_number() == rs.highest_root().height + 1);
  }
}

TEST_CASE("D3 is A3 in disguise") {
  RootSystem d3(CartanType::parse("D3"));
  RootSystem a3(CartanType::parse("A3"));
  CHECK(d3.num_positive() == a3.num_positive());
  CHECK(d3.coxeter_number() == a3.coxeter_number());
  CHECK(d3.exponents() == a3.exponents());
}

TEST_CASE("dominance order equals chain reachability") {
  for (const char* name : {"A3", "A4", "B3", "B4", "C4", "D4", "G2", "F4"}) {
    RootSystem rs(CartanType::parse(name));
    INFO(name);
    std::map<std::pair<int, int>, bool> memo;
    for (int a = 0; a < rs.num_positive(); ++a)
      for (int b = 0; b < rs.num_positive(); ++b) {
        bool expect = chain_leq(rs, a, b, memo);
        if (rs.poset_leq(a, b) != expect) {
          INFO(rs.root_name(a) << " vs " << rs.root_name(b));
          CHECK(rs.poset_leq(a, b) == expect);
        }
      }
  }
}

TEST_CASE("reflection table against the formula") {
  for (const char* name : {"A3", "B3", "G2", "F4"}) {
    RootSystem rs(CartanType::parse(name));
    INFO(name);
    for (int i = 0; i < rs.rank(); ++i)
      for (int r = 0; r < rs.num_positive(); ++r) {
        FiniteRoot img = rs.reflect(i, FiniteRoot(r, false));
        // s_i(beta) = beta - <alpha_i^vee, beta> alpha_i, checked in ambient
        // coordinates.
        Vec expect = sub(rs.root(r).ambient,
                         scaled(Rat(rs.pairing(i, r)), rs.root(i).ambient));
        Vec got = rs.root(img.index).ambient;
        if (img.negative) got = negated(got);
        CHECK(got == expect);
        // double reflection is the identity
        CHECK(rs.reflect(i, img) == FiniteRoot(r, false));
      }
  }
}

TEST_CASE("coroot pairing table is consistent with ambient coroots") {
  for (const char* name : {"A2", "B3", "C3", "G2", "F4"}) {
    RootSystem rs(CartanType::parse(name));
    INFO(name);
    for (int i = 0; i < rs.rank(); ++i)
      for (int r = 0; r < rs.num_positive(); ++r)
        CHECK(Rat(rs.pairing(i, r)) == dot(rs.coroot_ambient(i), rs.root(r).ambient));
    for (int r = 0; r < rs.num_positive(); ++r) {
      // coroot coordinates expand to the ambient coroot
      Vec acc(static_cast<std::size_t>(rs.ambient_dim()), Rat(0));
      for (int i = 0; i < rs.rank(); ++i)
        acc = add(acc, scaled(Rat(rs.coroot_coords(r)[i]), rs.coroot_ambient(i)));
      CHECK(acc == rs.coroot_ambient(r));
    }
  }
}

TEST_CASE("signed root arithmetic") {
  RootSystem rs(CartanType::parse("A3"));
  FiniteRoot e23 = rs.parse_root("e23");
  FiniteRoot e34 = rs.parse_root("e34");
  FiniteRoot e42 = rs.parse_root("e42");
  REQUIRE(rs.add_signed(e23, e34).has_value());
  CHECK(*rs.add_signed(e23, e34) == rs.parse_root("e24"));
  REQUIRE(rs.add_signed(rs.parse_root("e24"), e42).has_value() == false);  // zero
  CHECK(*rs.add_signed(rs.parse_root("e14"), e42) == rs.parse_root("e12"));
  CHECK_FALSE(rs.add_signed(rs.parse_root("e12"), e34).has_value());
}

TEST_CASE("root names round-trip in bracket form") {
  RootSystem b3(CartanType::parse("B3"));
  for (int r = 0; r < b3.num_positive(); ++r) {
    FiniteRoot f(r, r % 2 == 1);
    CHECK(b3.parse_root(b3.root_name(f)) == f);
  }
}
