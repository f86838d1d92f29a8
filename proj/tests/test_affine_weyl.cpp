#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "shilab/affine_weyl.hpp"

using namespace shilab;

namespace {

std::vector<int> random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> letter_d(0, rank);
  std::vector<int> w(static_cast<std::size_t>(len_d(rng)));
  for (int& s : w) s = letter_d(rng);
  return w;
}

}  // namespace

TEST_CASE("affine root printing and parsing") {
  RootSystem rs(CartanType::parse("A3"));
  AffineRoot a(rs.parse_root("e23"), 1);
  CHECK(affine_root_str(rs, a) == "d+e23");
  CHECK(affine_root_str(rs, AffineRoot(rs.parse_root("e32"), 1)) == "d-e23");
  CHECK(affine_root_str(rs, AffineRoot(rs.parse_root("e14"), 0)) == "e14");
  CHECK(affine_root_str(rs, AffineRoot(rs.parse_root("e41"), 2)) == "2d-e14");
  CHECK(affine_root_str(rs, AffineRoot(rs.parse_root("e23"), -1)) == "-d+e23");
  for (const char* s : {"e23", "d-e23", "2d-e14", "-d+e12", "d+e13", "3d-e24"})
    CHECK(affine_root_str(rs, parse_affine_root(rs, s)) == s);
  CHECK_THROWS_AS(parse_affine_root(rs, "de23"), FormatError);
  CHECK_THROWS_AS(parse_affine_root(rs, "d-"), FormatError);

  // positivity: alpha + k delta > 0 iff k >= 0 for alpha > 0, k >= 1 else
  CHECK(parse_affine_root(rs, "e23").positive());
  CHECK(parse_affine_root(rs, "d-e23").positive());
  CHECK_FALSE(parse_affine_root(rs, "-d+e23").positive());
  CHECK_FALSE(parse_affine_root(rs, "e32").positive());
}

TEST_CASE("simple reflections and the affine node") {
  RootSystem rs(CartanType::parse("A2"));
  AffineElement s0 = AffineElement::simple(rs, 0);
  AffineElement s1 = AffineElement::simple(rs, 1);

  CHECK((s0 * s0).is_identity());
  CHECK((s1 * s1).is_identity());
  CHECK_FALSE((s0 * s1).is_identity());
  // the affine A2 diagram is a triangle, so every pair braids with m = 3
  CHECK(s0 * s1 * s0 == s1 * s0 * s1);

  CHECK(length(s0) == 1);
  CHECK(inversions(s0) == std::vector<AffineRoot>{parse_affine_root(rs, "d-e13")});
  CHECK(inversions(s1) == std::vector<AffineRoot>{parse_affine_root(rs, "e12")});
  CHECK(right_descents(s0) == std::vector<int>{0});
  CHECK(right_descents(AffineElement::identity(rs)).empty());

  // s_i sends a_i to its negative and permutes the remaining positives.
  for (int s = 0; s <= rs.rank(); ++s) {
    AffineElement w = AffineElement::simple(rs, s);
    AffineRoot a = simple_affine_root(rs, s);
    CHECK(w.act(a) == -a);
  }
}

TEST_CASE("translations") {
  RootSystem rs(CartanType::parse("A2"));
  // t moves by the coroot of the highest root.
  std::vector<long long> theta_vee{1, 1};
  AffineElement t = AffineElement::translation(rs, theta_vee);
  CHECK(t.finite_part().is_identity());
  CHECK(t.act(parse_affine_root(rs, "e12")) == parse_affine_root(rs, "-d+e12"));
  CHECK(t.act(parse_affine_root(rs, "e13")) == AffineRoot(rs.parse_root("e13"), -2));
  CHECK(length(t) == 4);  // sum of <theta^vee, alpha> over the three positives
  CHECK(is_dominant(t));

  // s0 = t_{theta^vee} s_theta: check the factorization.
  AffineElement s0 = AffineElement::simple(rs, 0);
  FiniteWeylElement stheta =
      FiniteWeylElement::root_reflection(rs, rs.highest_root_index());
  AffineElement prod = t * AffineElement(rs, stheta, {0, 0});
  CHECK(prod == s0);
}

TEST_CASE("group law and inverses under the action") {
  RootSystem rs(CartanType::parse("B2"));
  std::mt19937 rng(7u);
  for (int trial = 0; trial < 60; ++trial) {
    AffineElement w = from_word(rs, random_word(rng, rs.rank(), 12));
    AffineElement v = from_word(rs, random_word(rng, rs.rank(), 12));
    CHECK((w * w.inverse()).is_identity());
    for (int r = 0; r < rs.num_positive(); ++r)
      for (int k = -1; k <= 1; ++k) {
        AffineRoot a(FiniteRoot(r, false), k);
        CHECK((w * v).act(a) == w.act(v.act(a)));
        CHECK(w.inverse().act(w.act(a)) == a);
      }
  }
}

TEST_CASE("finite part preserves the bilinear form") {
  RootSystem rs(CartanType::parse("G2"));
  std::mt19937 rng(11u);
  for (int trial = 0; trial < 20; ++trial) {
    AffineElement w = from_word(rs, random_word(rng, rs.rank(), 10));
    const FiniteWeylElement& u = w.finite_part();
    for (int r = 0; r < rs.num_positive(); ++r)
      for (int s = 0; s < rs.num_positive(); ++s) {
        FiniteRoot ir = u.apply(FiniteRoot(r, false));
        FiniteRoot is = u.apply(FiniteRoot(s, false));
        long long sign = (ir.negative == is.negative) ? 1 : -1;
        CHECK(sign * rs.inner(ir.index, is.index) == rs.inner(r, s));
      }
  }
}

TEST_CASE("shi coefficients, length, inversions agree") {
  std::mt19937 rng(20240915u);
  for (const char* name : {"A1", "A2", "A3", "B2", "C3", "G2", "D4"}) {
    RootSystem rs(CartanType::parse(name));
    INFO(name);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<int> word = random_word(rng, rs.rank(), 14);
      AffineElement w = from_word(rs, word);

      KVector k = shi_coefficients(w);
      long long abs_sum = 0;
      for (long long v : k) abs_sum += v < 0 ? -v : v;

      std::vector<AffineRoot> n = inversions(w);
      std::vector<AffineRoot> nd = inversions_direct(w);
      CHECK(n == nd);
      CHECK(static_cast<long long>(n.size()) == abs_sum);
      CHECK(length(w) == abs_sum);
      CHECK(static_cast<std::size_t>(length(w)) <= word.size());

      // every listed inversion really is sent negative, and w acts
      // injectively on them
      std::set<AffineRoot> img;
      for (const AffineRoot& a : n) {
        CHECK(a.positive());
        AffineRoot b = w.inverse().act(a);
        CHECK((-b).positive());
        img.insert(b);
      }
      CHECK(img.size() == n.size());

      // reconstruct from the inversion set
      AffineElement back = element_from_inversions(rs, n);
      CHECK(back == w);
      std::vector<int> rw = reduced_word(w);
      CHECK(static_cast<long long>(rw.size()) == length(w));
      CHECK(from_word(rs, rw) == w);
    }
  }
}

TEST_CASE("reduced words are lexicographically least") {
  RootSystem rs(CartanType::parse("A2"));
  // All reduced expressions of the longest element of W0 lifted into the
  // affine group: w = s1 s2 s1 = s2 s1 s2; the least expression starts at 1.
  AffineElement w = from_word(rs, {2, 1, 2});
  CHECK(reduced_word(w) == std::vector<int>{1, 2, 1});
  AffineElement v = from_word(rs, {1, 0});
  CHECK(reduced_word(v) == std::vector<int>{1, 0});
  CHECK(reduced_word(from_word(rs, {0, 1})) == std::vector<int>{0, 1});
  CHECK(reduced_word(AffineElement::identity(rs)).empty());

  // Non-reduced input words collapse.
  CHECK(reduced_word(from_word(rs, {1, 1, 2, 2, 0})) == std::vector<int>{0});
}

TEST_CASE("staircase region element in A3") {
  RootSystem rs(CartanType::parse("A3"));
  std::vector<AffineRoot> n{parse_affine_root(rs, "d-e23"), parse_affine_root(rs, "d-e13"),
                            parse_affine_root(rs, "d-e24"), parse_affine_root(rs, "d-e14")};
  std::sort(n.begin(), n.end());
  AffineElement w = element_from_inversions(rs, n);

  CHECK(reduced_word(w) == std::vector<int>{0, 1, 3, 0});
  CHECK(length(w) == 4);
  CHECK(shi_coefficients(w) == KVector{0, 1, 0, 1, 1, 1});
  CHECK(is_dominant(w));
  CHECK(inversions(w) == n);
  CHECK(nd_r(w) == std::vector<AffineRoot>{parse_affine_root(rs, "d-e23")});

  // A diagram rotation of the same word expresses a different element of
  // the same length (the relabeling i -> i+2 mod 4 carries one to the other).
  AffineElement rotated = from_word(rs, {2, 3, 1, 2});
  CHECK(length(rotated) == 4);
  CHECK_FALSE(rotated == w);
  std::vector<int> sigma{2, 3, 0, 1};
  std::vector<int> relabeled;
  for (int s : {2, 3, 1, 2}) relabeled.push_back(sigma[static_cast<std::size_t>(s)]);
  CHECK(from_word(rs, relabeled) == w);

  // Count how many of the 24 relabelings work; at least the rotation must.
  std::vector<int> perm{0, 1, 2, 3};
  int hits = 0;
  do {
    std::vector<int> cand;
    for (int s : {2, 3, 1, 2}) cand.push_back(perm[static_cast<std::size_t>(s)]);
    if (from_word(rs, cand) == w) ++hits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(hits >= 1);
}

TEST_CASE("element_from_inversions rejects non-inversion sets") {
  RootSystem rs(CartanType::parse("A2"));
  // {e13} is not closed under the coclosure conditions: any w with
  // w^{-1}(e13) < 0 also inverts one of e12, e23.
  CHECK_THROWS_AS(element_from_inversions(rs, {parse_affine_root(rs, "e13")}),
                  NotAnInversionSet);
  // {2d-e13} without d-e13 violates convexity.
  CHECK_THROWS_AS(element_from_inversions(rs, {AffineRoot(rs.parse_root("e31"), 2)}),
                  NotAnInversionSet);
  CHECK_THROWS_AS(element_from_inversions(rs, {parse_affine_root(rs, "e32")}),
                  NotAnInversionSet);  // not even positive
  // Mixing root systems is a usage error.
  RootSystem other(CartanType::parse("B2"));
  AffineElement w = AffineElement::simple(rs, 1);
  AffineElement v = AffineElement::simple(other, 1);
  CHECK_THROWS_AS(w * v, MixedSystems);
}

TEST_CASE("dominance detected from coefficients") {
  RootSystem rs(CartanType::parse("A2"));
  CHECK(is_dominant(AffineElement::identity(rs)));
  CHECK(is_dominant(AffineElement::simple(rs, 0)));
  CHECK_FALSE(is_dominant(AffineElement::simple(rs, 1)));
  CHECK_FALSE(is_dominant(from_word(rs, {1, 0})));
  CHECK(is_dominant(from_word(rs, {0, 1})));
  CHECK_FALSE(is_dominant(from_word(rs, {0, 1, 0})));
}

TEST_CASE("canonical keys separate elements") {
  RootSystem rs(CartanType::parse("B2"));
  std::mt19937 rng(3u);
  std::set<std::vector<long long>> keys;
  std::vector<AffineElement> elems;
  for (int trial = 0; trial < 80; ++trial) {
    AffineElement w = from_word(rs, random_word(rng, rs.rank(), 8));
    bool fresh = keys.insert(w.canonical_key()).second;
    for (const AffineElement& seen : elems)
      if (seen == w) CHECK_FALSE(fresh);
    if (fresh) elems.push_back(w);
  }
  CHECK(keys.size() == elems.size());
}
