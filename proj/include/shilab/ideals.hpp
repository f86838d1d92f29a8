#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shilab/affine_weyl.hpp"
#include "shilab/bitset128.hpp"
#include "shilab/root_system.hpp"

namespace shilab {

/// Up-closed set of positive roots (a dual order ideal / filter for the
/// dominance order).  Construct through make_ideal or up_closure, which
/// enforce closedness.
struct RootIdeal {
  RootSet roots;
  friend bool operator==(const RootIdeal&, const RootIdeal&) = default;
};

/// Pairwise incomparable set of positive roots.  Construct through
/// make_antichain or minimal_elements.
struct Antichain {
  RootSet roots;
  friend bool operator==(const Antichain&, const Antichain&) = default;
};

inline bool is_up_closed(const RootSystem& rs, RootSet s) {
  for (int r = s.next(0); r >= 0; r = s.next(r + 1))
    if (!s.contains_all(rs.up_mask(r))) return false;
  return true;
}

/// Validates pairwise incomparability; reports the first offending pair.
inline Antichain make_antichain(const RootSystem& rs, RootSet s) {
  for (int a = s.next(0); a >= 0; a = s.next(a + 1)) {
    RootSet above = (rs.up_mask(a) - RootSet::single(a)) & s;
    if (above.any()) {
      int b = above.next(0);
      throw NotAnAntichain("not an antichain: " + rs.root_name(a) + " <= " + rs.root_name(b),
                           a, b);
    }
  }
  return Antichain{s};
}

inline RootIdeal make_ideal(const RootSystem& rs, RootSet s) {
  if (!is_up_closed(rs, s)) throw ConstructionError("root set is not up-closed");
  return RootIdeal{s};
}

/// Smallest up-closed set containing the antichain.
inline RootIdeal up_closure(const RootSystem& rs, const Antichain& a) {
  RootSet s;
  for (int r = a.roots.next(0); r >= 0; r = a.roots.next(r + 1)) s |= rs.up_mask(r);
  return RootIdeal{s};
}

/// The minimal elements of an ideal; inverse of up_closure.
inline Antichain minimal_elements(const RootSystem& rs, const RootIdeal& ideal) {
  RootSet out;
  for (int r = ideal.roots.next(0); r >= 0; r = ideal.roots.next(r + 1)) {
    RootSet below = (rs.down_mask(r) - RootSet::single(r)) & ideal.roots;
    if (below.empty()) out.set(r);
  }
  return Antichain{out};
}

/// The full ideal of all positive roots.
inline RootIdeal full_ideal(const RootSystem& rs) { return RootIdeal{rs.full_mask()}; }

/**
 * All antichains of the root poset, in depth-first lexicographic order on
 * root indices (the empty antichain first).  The order is deterministic and
 * matches enumerate_ideals entry for entry.
 */
inline std::vector<Antichain> enumerate_antichains(const RootSystem& rs) {
  const int m = rs.num_positive();
  std::vector<Antichain> out;
  std::function<void(int, RootSet, RootSet)> rec = [&](int start, RootSet cur,
                                                       RootSet forbidden) {
    out.push_back(Antichain{cur});
    for (int j = start; j < m; ++j) {
      if (forbidden.test(j)) continue;
      rec(j + 1, cur | RootSet::single(j), forbidden | rs.comparable_mask(j));
    }
  };
  rec(0, RootSet{}, RootSet{});
  return out;
}

inline std::vector<RootIdeal> enumerate_ideals(const RootSystem& rs) {
  std::vector<RootIdeal> out;
  for (const Antichain& a : enumerate_antichains(rs)) out.push_back(up_closure(rs, a));
  return out;
}

/// Sums landing back in the root system: {a + b : a in x, b in y} as roots.
inline RootSet bracket(const RootSystem& rs, RootSet x, RootSet y) {
  RootSet out;
  for (int a = x.next(0); a >= 0; a = x.next(a + 1))
    for (int b = y.next(0); b >= 0; b = y.next(b + 1))
      if (auto s = rs.add_roots(a, b)) out.set(*s);
  return out;
}

/**
 * The bracket powers Psi^1 = Psi, Psi^k = [Psi^{k-1}, Psi]; returns all
 * nonempty powers.  Since Psi^k sits inside the roots of height >= k the
 * sequence dies out before the Coxeter number.
 */
inline std::vector<RootSet> ideal_powers(const RootSystem& rs, const RootIdeal& ideal) {
  std::vector<RootSet> powers;
  if (ideal.roots.empty()) return powers;
  powers.push_back(ideal.roots);
  for (;;) {
    RootSet next = bracket(rs, powers.back(), ideal.roots);
    if (next.empty()) break;
    powers.push_back(next);
  }
  return powers;
}

inline RootSet ideal_power(const RootSystem& rs, const RootIdeal& ideal, int k) {
  if (k < 1) throw Error("ideal_power expects k >= 1");
  std::vector<RootSet> powers = ideal_powers(rs, ideal);
  if (k > static_cast<int>(powers.size())) return RootSet{};
  return powers[static_cast<std::size_t>(k - 1)];
}

/**
 * The affine root set L(Psi) = union over k >= 1 of (k*delta - Psi^k),
 * sorted.  This is the inversion set of the minimal element attached to the
 * ideal; in particular its size is that element's length.
 */
inline std::vector<AffineRoot> l_set(const RootSystem& rs, const RootIdeal& ideal) {
  std::vector<AffineRoot> out;
  std::vector<RootSet> powers = ideal_powers(rs, ideal);
  for (std::size_t k = 0; k < powers.size(); ++k)
    for (int r = powers[k].next(0); r >= 0; r = powers[k].next(r + 1))
      out.push_back(AffineRoot(FiniteRoot(r, true), static_cast<int>(k) + 1));
  std::sort(out.begin(), out.end());
  return out;
}

// --- Counting -------------------------------------------------------------

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

/**
 * Closed-form antichain counts for the classical families:
 *   A_n: Catalan number C(2n+2, n+1)/(n+2)
 *   B_n, C_n: central binomial C(2n, n)
 *   D_n: C(2n-1, n) + C(2n-2, n)
 * Exceptional families are not covered (use catalan_product there).
 */
inline long long mu_formula(CartanType type) {
  type.validate();
  const int n = type.rank;
  Int v;
  switch (type.family) {
    case Family::A: v = binomial(2 * n + 2, n + 1) / (n + 2); break;
    case Family::B:
    case Family::C: v = binomial(2 * n, n); break;
    case Family::D: v = binomial(2 * n - 1, n) + binomial(2 * n - 2, n); break;
    default:
      throw UnsupportedFormula("no closed-form antichain count for family " +
                               type.to_string());
  }
  return static_cast<long long>(v);
}

/// W-Catalan number prod_i (e_i + h + 1)/(e_i + 1), from the exponents the
/// root system recomputes out of its height distribution.
inline long long catalan_product(const RootSystem& rs) {
  Rat p = 1;
  for (int e : rs.exponents()) p *= Rat(e + rs.coxeter_number() + 1, e + 1);
  if (!is_integer(p)) throw Error("internal: Catalan product is not an integer");
  return to_int(p);
}

/// The ideal count as |W|^{-1} prod_i (e_i + h + 1): the number of W-orbits
/// on the (h+1)-torsion of the (co)root lattice.
inline long long cellini_papi_count(const RootSystem& rs) {
  Int num = 1;
  for (int e : rs.exponents()) num *= e + rs.coxeter_number() + 1;
  Int w = rs.weyl_order();
  if (num % w != 0) throw Error("internal: orbit-count product not divisible by |W|");
  return static_cast<long long>(num / w);
}

}  // namespace shilab
