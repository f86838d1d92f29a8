#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "shilab/affine_weyl.hpp"
#include "shilab/cone.hpp"
#include "shilab/ideals.hpp"

namespace shilab {

/**
 * A Shi sign type: one entry in {-, 0, +} per positive root, in canonical
 * root order.  For an affine Weyl element this is the entrywise sign of its
 * Shi coefficient vector; the dominant admissible ones are exactly the
 * indicator patterns of up-closed root sets.
 */
struct SignType {
  std::vector<int8_t> entries;  // -1, 0, +1

  friend bool operator==(const SignType&, const SignType&) = default;
  friend auto operator<=>(const SignType& a, const SignType& b) {
    return a.entries <=> b.entries;
  }
};

/// Shi's zeta map: the sign type of the alcove of w.
inline SignType zeta(const AffineElement& w) {
  SignType st;
  for (long long v : shi_coefficients(w))
    st.entries.push_back(v < 0 ? -1 : (v > 0 ? 1 : 0));
  return st;
}

inline SignType sign_type_of_ideal(const RootSystem& rs, const RootIdeal& ideal) {
  SignType st;
  st.entries.resize(static_cast<std::size_t>(rs.num_positive()), 0);
  for (int r = ideal.roots.next(0); r >= 0; r = ideal.roots.next(r + 1))
    st.entries[static_cast<std::size_t>(r)] = 1;
  return st;
}

inline bool is_dominant_sign(const SignType& st) {
  return std::none_of(st.entries.begin(), st.entries.end(),
                      [](int8_t v) { return v < 0; });
}

/// Dominant sign types that actually occur: no minus entries and the plus
/// entries form an up-closed root set.
inline bool is_admissible_dominant(const RootSystem& rs, const SignType& st) {
  if (static_cast<int>(st.entries.size()) != rs.num_positive()) return false;
  if (!is_dominant_sign(st)) return false;
  RootSet plus;
  for (int r = 0; r < rs.num_positive(); ++r)
    if (st.entries[static_cast<std::size_t>(r)] > 0) plus.set(r);
  return is_up_closed(rs, plus);
}

inline RootSet plus_set(const SignType& st) {
  RootSet s;
  for (std::size_t r = 0; r < st.entries.size(); ++r)
    if (st.entries[r] > 0) s.set(static_cast<int>(r));
  return s;
}

inline std::string sign_str(const SignType& st) {
  std::string s;
  for (int8_t v : st.entries) s += v < 0 ? '-' : (v > 0 ? '+' : '0');
  return s;
}

inline SignType parse_sign_type(const RootSystem& rs, const std::string& text) {
  if (static_cast<int>(text.size()) != rs.num_positive())
    throw FormatError("sign type has " + std::to_string(text.size()) +
                      " entries, expected " + std::to_string(rs.num_positive()));
  SignType st;
  for (char c : text) {
    if (c == '-')
      st.entries.push_back(-1);
    else if (c == '0')
      st.entries.push_back(0);
    else if (c == '+')
      st.entries.push_back(1);
    else
      throw FormatError(std::string("invalid sign character '") + c + "'");
  }
  return st;
}

/**
 * The minimal alcove element attached to an up-closed root set Psi: the
 * unique w with N(w) = L(Psi) = union_k (k*delta - Psi^k).  Its length is
 * |L(Psi)| = sum_k |Psi^k|, and its region is the dominant Shi region whose
 * sign type is the indicator of Psi.
 */
inline AffineElement minimal_element_of_ideal(const RootSystem& rs, const RootIdeal& ideal) {
  return element_from_inversions(rs, l_set(rs, ideal));
}

/// One face constraint of a Shi region: <x, root> > bound (lower = false)
/// or <x, root> < bound (lower = true).
struct Halfspace {
  int root = -1;
  long long bound = 0;
  bool upper = false;  // true: <x, root> < bound; false: <x, root> > bound
};

/**
 * A dominant Shi region, materialized in all its guises at once: the ideal,
 * its antichain of minimal roots, the sign type, the minimal alcove element,
 * and the defining strip inequalities (k < <x, alpha> < k+1 entrywise for 0
 * entries, <x, alpha> > 1 for plus entries).
 */
struct DominantRegion {
  RootIdeal ideal;
  Antichain antichain;
  SignType sign_type;
  AffineElement minimal_element;
  std::vector<Halfspace> walls;

  std::vector<AffineRoot> descent_roots() const { return nd_r(minimal_element); }
};

inline DominantRegion region_from_antichain(const RootSystem& rs, const Antichain& a) {
  RootIdeal ideal = up_closure(rs, a);
  DominantRegion region{ideal, a, sign_type_of_ideal(rs, ideal),
                        minimal_element_of_ideal(rs, ideal),
                        {}};
  for (int r = 0; r < rs.num_positive(); ++r) {
    if (ideal.roots.test(r)) {
      region.walls.push_back(Halfspace{r, 1, false});
    } else {
      region.walls.push_back(Halfspace{r, 0, false});
      region.walls.push_back(Halfspace{r, 1, true});
    }
  }
  return region;
}

inline DominantRegion region_from_ideal(const RootSystem& rs, const RootIdeal& ideal) {
  return region_from_antichain(rs, minimal_elements(rs, ideal));
}

/**
 * The small roots: inversions of some element whose inversion set they
 * generate conically.  For these affine Weyl groups they are exactly the
 * alpha and delta - alpha for alpha a positive root (level <= 1).
 */
inline std::vector<AffineRoot> small_roots(const RootSystem& rs) {
  std::vector<AffineRoot> out;
  for (int r = 0; r < rs.num_positive(); ++r) out.push_back(AffineRoot(FiniteRoot(r, false), 0));
  for (int r = 0; r < rs.num_positive(); ++r) out.push_back(AffineRoot(FiniteRoot(r, true), 1));
  std::sort(out.begin(), out.end());
  return out;
}

/// Ambient coordinates of an affine root, with the delta level appended as
/// one extra coordinate.
inline Vec affine_ambient(const RootSystem& rs, const AffineRoot& r) {
  Vec v = rs.root(r.finite.index).ambient;
  if (r.finite.negative) v = negated(v);
  v.push_back(Rat(r.level));
  return v;
}

/// Exact cone membership for affine roots.
inline bool cone_member(const RootSystem& rs, const AffineRoot& beta,
                        const std::vector<AffineRoot>& generators) {
  std::vector<Vec> gens;
  gens.reserve(generators.size());
  for (const AffineRoot& g : generators) gens.push_back(affine_ambient(rs, g));
  return in_nonneg_span(gens, affine_ambient(rs, beta));
}

/**
 * Low elements: every inversion must lie in the cone spanned by the small
 * inversions N(w) ∩ Σ.  (The reverse inclusion N(w) ⊇ cone ∩ roots holds
 * automatically by convexity of inversion sets, so only this direction is
 * tested.)
 */
inline bool is_low(const AffineElement& w) {
  const RootSystem& rs = w.system();
  std::vector<AffineRoot> n = inversions(w);
  std::vector<AffineRoot> gens;
  for (const AffineRoot& b : n)
    if (b.level == 0 || (b.level == 1 && b.finite.negative)) gens.push_back(b);
  for (const AffineRoot& b : n) {
    if (b.level == 0 || (b.level == 1 && b.finite.negative)) continue;  // a generator
    if (!cone_member(rs, b, gens)) return false;
  }
  return true;
}

/**
 * Reads the descents of a dominant region off its sign type: the plus
 * entries that can be flipped to 0 with the result still admissible.  These
 * are exactly the minimal roots of the plus set, and delta - alpha over
 * these alpha are the right descent roots of the minimal element.
 */
inline Antichain descent_antichain_by_flip(const RootSystem& rs, const SignType& st) {
  if (!is_admissible_dominant(rs, st))
    throw Error("sign type " + sign_str(st) + " is not admissible dominant");
  RootSet plus = plus_set(st);
  RootSet out;
  for (int r = plus.next(0); r >= 0; r = plus.next(r + 1)) {
    RootSet flipped = plus - RootSet::single(r);
    if (is_up_closed(rs, flipped)) out.set(r);
  }
  return make_antichain(rs, out);
}

}  // namespace shilab
