#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "shilab/root_system.hpp"

namespace shilab {

/**
 * Real affine root alpha + k*delta, stored as a signed finite root plus the
 * delta level.  Positivity: alpha + k*delta > 0 iff (alpha > 0 and k >= 0)
 * or (alpha < 0 and k >= 1).
 */
struct AffineRoot {
  FiniteRoot finite;
  int level = 0;

  AffineRoot() = default;
  AffineRoot(FiniteRoot f, int k) : finite(f), level(k) {}

  bool positive() const { return finite.negative ? level >= 1 : level >= 0; }
  AffineRoot operator-() const { return AffineRoot(-finite, -level); }

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
  friend auto operator<=>(const AffineRoot& a, const AffineRoot& b) {
    if (a.level != b.level) return a.level <=> b.level;
    return a.finite <=> b.finite;
  }
};

/// "e23" (level 0), "d-e23", "2d-e14", "d+e12", "-d+e23", ...
inline std::string affine_root_str(const RootSystem& rs, const AffineRoot& r) {
  if (r.level == 0) return rs.root_name(r.finite);
  std::string s;
  if (r.level == 1)
    s = "d";
  else if (r.level == -1)
    s = "-d";
  else
    s = std::to_string(r.level) + "d";
  if (r.finite.negative)
    s += "-" + rs.root_name(FiniteRoot(r.finite.index, false));
  else
    s += "+" + rs.root_name(r.finite);
  return s;
}

inline AffineRoot parse_affine_root(const RootSystem& rs, const std::string& text) {
  std::size_t d = text.find('d');
  if (d == std::string::npos) return AffineRoot(rs.parse_root(text), 0);
  std::string head = text.substr(0, d);
  int level;
  if (head.empty())
    level = 1;
  else if (head == "-")
    level = -1;
  else {
    try {
      level = std::stoi(head);
    } catch (const std::exception&) {
      throw FormatError("cannot parse affine root '" + text + "'");
    }
  }
  std::string tail = text.substr(d + 1);
  if (tail.empty() || (tail[0] != '+' && tail[0] != '-'))
    throw FormatError("cannot parse affine root '" + text + "' (expected d+... or d-...)");
  FiniteRoot f = rs.parse_root(tail.substr(1));
  if (tail[0] == '-') f = -f;
  return AffineRoot(f, level);
}

/**
 * Element of the finite Weyl group W_0, stored as the table of images of
 * all positive roots (signed).  Application and composition are table
 * lookups; no matrix arithmetic after construction.
 */
class FiniteWeylElement {
 public:
  FiniteWeylElement() = default;

  static FiniteWeylElement identity(const RootSystem& rs) {
    FiniteWeylElement e;
    e.img_.resize(static_cast<std::size_t>(rs.num_positive()));
    for (int r = 0; r < rs.num_positive(); ++r)
      e.img_[static_cast<std::size_t>(r)] = static_cast<int16_t>(r + 1);
    return e;
  }

  /// Simple reflection s_{alpha_{i+1}}, i in [0, rank).
  static FiniteWeylElement simple_reflection(const RootSystem& rs, int i) {
    FiniteWeylElement e;
    e.img_.resize(static_cast<std::size_t>(rs.num_positive()));
    for (int r = 0; r < rs.num_positive(); ++r)
      e.img_[static_cast<std::size_t>(r)] = encode(rs.reflect(i, FiniteRoot(r, false)));
    return e;
  }

  /// Reflection in an arbitrary positive root.
  static FiniteWeylElement root_reflection(const RootSystem& rs, int b) {
    FiniteWeylElement e;
    e.img_.resize(static_cast<std::size_t>(rs.num_positive()));
    const std::vector<int>& cc = rs.coroot_coords(b);
    for (int r = 0; r < rs.num_positive(); ++r) {
      long long p = 0;
      for (int i = 0; i < rs.rank(); ++i) p += static_cast<long long>(cc[i]) * rs.pairing(i, r);
      std::vector<int> c(rs.root(r).simple);
      for (int k = 0; k < rs.rank(); ++k) c[k] -= static_cast<int>(p) * rs.root(b).simple[k];
      auto img = rs.find_by_simple_signed(c);
      if (!img) throw Error("internal: reflection image is not a root");
      e.img_[static_cast<std::size_t>(r)] = encode(*img);
    }
    return e;
  }

  /// Reconstructs the element from the images of the simple roots.
  static FiniteWeylElement from_simple_images(const RootSystem& rs,
                                              const std::vector<FiniteRoot>& images) {
    if (static_cast<int>(images.size()) != rs.rank())
      throw FormatError("expected one simple-root image per simple root");
    FiniteWeylElement e;
    e.img_.resize(static_cast<std::size_t>(rs.num_positive()));
    std::vector<bool> hit(static_cast<std::size_t>(rs.num_positive()), false);
    for (int r = 0; r < rs.num_positive(); ++r) {
      std::vector<int> c(static_cast<std::size_t>(rs.rank()), 0);
      for (int i = 0; i < rs.rank(); ++i) {
        int coeff = rs.root(r).simple[i];
        if (coeff == 0) continue;
        const Root& im = rs.root(images[static_cast<std::size_t>(i)].index);
        int sign = images[static_cast<std::size_t>(i)].negative ? -1 : 1;
        for (int k = 0; k < rs.rank(); ++k) c[k] += coeff * sign * im.simple[k];
      }
      auto img = rs.find_by_simple_signed(c);
      if (!img)
        throw FormatError("simple-root images do not define a Weyl group element");
      if (hit[static_cast<std::size_t>(img->index)])
        throw FormatError("simple-root images do not define a Weyl group element");
      hit[static_cast<std::size_t>(img->index)] = true;
      e.img_[static_cast<std::size_t>(r)] = encode(*img);
    }
    return e;
  }

  FiniteRoot apply(FiniteRoot r) const {
    FiniteRoot out = decode(img_[static_cast<std::size_t>(r.index)]);
    return r.negative ? -out : out;
  }

  /// (this o other): apply `other` first.
  FiniteWeylElement compose(const FiniteWeylElement& other) const {
    FiniteWeylElement e;
    e.img_.resize(img_.size());
    for (std::size_t r = 0; r < img_.size(); ++r)
      e.img_[r] = encode(apply(decode(other.img_[r])));
    return e;
  }

  FiniteWeylElement inverse() const {
    FiniteWeylElement e;
    e.img_.resize(img_.size());
    for (std::size_t r = 0; r < img_.size(); ++r) {
      FiniteRoot f = decode(img_[r]);
      e.img_[static_cast<std::size_t>(f.index)] = static_cast<int16_t>(
          f.negative ? -(static_cast<int>(r) + 1) : static_cast<int>(r) + 1);
    }
    return e;
  }

  bool is_identity() const {
    for (std::size_t r = 0; r < img_.size(); ++r)
      if (img_[r] != static_cast<int16_t>(r + 1)) return false;
    return true;
  }

  int16_t code(int r) const { return img_[static_cast<std::size_t>(r)]; }
  friend bool operator==(const FiniteWeylElement&, const FiniteWeylElement&) = default;

 private:
  static int16_t encode(FiniteRoot f) {
    return static_cast<int16_t>(f.negative ? -(f.index + 1) : f.index + 1);
  }
  static FiniteRoot decode(int16_t v) {
    return v < 0 ? FiniteRoot(-v - 1, true) : FiniteRoot(v - 1, false);
  }

  std::vector<int16_t> img_;
};

/**
 * Element of the affine Weyl group W = Q^vee >< W_0, stored as the pair
 * (u, lambda) acting on V by x -> u(x) + lambda.  lambda is kept in
 * simple-coroot coordinates (integers).  Elements hold a pointer to their
 * root system, which must outlive them.
 */
class AffineElement {
 public:
  AffineElement(const RootSystem& rs, FiniteWeylElement u, std::vector<long long> lambda)
      : rs_(&rs), u_(std::move(u)), lambda_(std::move(lambda)) {}

  static AffineElement identity(const RootSystem& rs) {
    return AffineElement(rs, FiniteWeylElement::identity(rs),
                         std::vector<long long>(static_cast<std::size_t>(rs.rank()), 0));
  }

  /**
   * Affine simple reflection.  s in [1, rank] is the finite reflection
   * s_{alpha_s}; s = 0 is the reflection in the wall <x, theta> = 1, i.e.
   * the pair (s_theta, theta^vee).
   */
  static AffineElement simple(const RootSystem& rs, int s) {
    if (s < 0 || s > rs.rank()) throw Error("simple reflection index out of range");
    if (s == 0) {
      std::vector<long long> lam;
      for (int c : rs.coroot_coords(rs.highest_root_index())) lam.push_back(c);
      return AffineElement(rs, FiniteWeylElement::root_reflection(rs, rs.highest_root_index()),
                           std::move(lam));
    }
    return AffineElement(rs, FiniteWeylElement::simple_reflection(rs, s - 1),
                         std::vector<long long>(static_cast<std::size_t>(rs.rank()), 0));
  }

  /// Translation by an element of the coroot lattice (simple-coroot coords).
  static AffineElement translation(const RootSystem& rs, std::vector<long long> lambda) {
    return AffineElement(rs, FiniteWeylElement::identity(rs), std::move(lambda));
  }

  const RootSystem& system() const { return *rs_; }
  const FiniteWeylElement& finite_part() const { return u_; }
  const std::vector<long long>& translation_part() const { return lambda_; }

  AffineElement operator*(const AffineElement& o) const {
    if (rs_ != o.rs_) throw MixedSystems("cannot multiply elements over different root systems");
    std::vector<long long> lam(lambda_);
    for (int j = 0; j < rs_->rank(); ++j) {
      if (o.lambda_[static_cast<std::size_t>(j)] == 0) continue;
      FiniteRoot f = u_.apply(FiniteRoot(j, false));
      const std::vector<int>& cc = rs_->coroot_coords(f.index);
      long long sign = f.negative ? -1 : 1;
      for (int k = 0; k < rs_->rank(); ++k)
        lam[static_cast<std::size_t>(k)] +=
            o.lambda_[static_cast<std::size_t>(j)] * sign * cc[static_cast<std::size_t>(k)];
    }
    return AffineElement(*rs_, u_.compose(o.u_), std::move(lam));
  }

  AffineElement inverse() const {
    FiniteWeylElement uinv = u_.inverse();
    std::vector<long long> lam(static_cast<std::size_t>(rs_->rank()), 0);
    for (int j = 0; j < rs_->rank(); ++j) {
      if (lambda_[static_cast<std::size_t>(j)] == 0) continue;
      FiniteRoot f = uinv.apply(FiniteRoot(j, false));
      const std::vector<int>& cc = rs_->coroot_coords(f.index);
      long long sign = f.negative ? 1 : -1;  // -u^{-1}(lambda)
      for (int k = 0; k < rs_->rank(); ++k)
        lam[static_cast<std::size_t>(k)] +=
            lambda_[static_cast<std::size_t>(j)] * sign * cc[static_cast<std::size_t>(k)];
    }
    return AffineElement(*rs_, std::move(uinv), std::move(lam));
  }

  /// Action on affine roots: for w = (u, lambda),
  /// w(alpha + k*delta) = u(alpha) + (k - <lambda, u(alpha)>)*delta.
  AffineRoot act(const AffineRoot& r) const {
    FiniteRoot f = u_.apply(r.finite);
    long long level = r.level - rs_->pairing(lambda_, f);
    return AffineRoot(f, static_cast<int>(level));
  }

  bool is_identity() const {
    for (long long v : lambda_)
      if (v != 0) return false;
    return u_.is_identity();
  }

  /// Stable dedup/sort key: translation coordinates then root images.
  std::vector<long long> canonical_key() const {
    std::vector<long long> key(lambda_);
    for (int r = 0; r < rs_->num_positive(); ++r) key.push_back(u_.code(r));
    return key;
  }

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.rs_ == b.rs_ && a.lambda_ == b.lambda_ && a.u_ == b.u_;
  }

 private:
  const RootSystem* rs_;
  FiniteWeylElement u_;
  std::vector<long long> lambda_;
};

/// The simple affine roots a_0 = delta - theta, a_s = alpha_s (s >= 1).
inline AffineRoot simple_affine_root(const RootSystem& rs, int s) {
  if (s < 0 || s > rs.rank()) throw Error("simple root index out of range");
  if (s == 0) return AffineRoot(FiniteRoot(rs.highest_root_index(), true), 1);
  return AffineRoot(FiniteRoot(s - 1, false), 0);
}

using KVector = std::vector<long long>;

/**
 * Shi coefficients of w: for every positive root alpha, the integer k(w,
 * alpha) such that k(w, alpha) <= <x, alpha> <= k(w, alpha) + 1 on the
 * alcove w(A0).  Closed form for w = (u, lambda):
 * k(w, alpha) = <lambda, alpha> - [u^{-1}(alpha) < 0].
 */
inline KVector shi_coefficients(const AffineElement& w) {
  const RootSystem& rs = w.system();
  FiniteWeylElement uinv = w.finite_part().inverse();
  KVector k(static_cast<std::size_t>(rs.num_positive()));
  for (int r = 0; r < rs.num_positive(); ++r) {
    long long v = rs.pairing(w.translation_part(), FiniteRoot(r, false));
    if (uinv.apply(FiniteRoot(r, false)).negative) v -= 1;
    k[static_cast<std::size_t>(r)] = v;
  }
  return k;
}

/// Coxeter length; equals |N(w)| = sum_alpha |k(w, alpha)| (the number of
/// hyperplanes separating w(A0) from A0).
inline long long length(const AffineElement& w) {
  long long s = 0;
  for (long long v : shi_coefficients(w)) s += v < 0 ? -v : v;
  return s;
}

inline bool is_dominant(const AffineElement& w) {
  for (long long v : shi_coefficients(w))
    if (v < 0) return false;
  return true;
}

/// Right descent indices {s : l(w s) < l(w)} = {s : w(a_s) < 0}.
inline std::vector<int> right_descents(const AffineElement& w) {
  std::vector<int> out;
  for (int s = 0; s <= w.system().rank(); ++s)
    if (!w.act(simple_affine_root(w.system(), s)).positive()) out.push_back(s);
  return out;
}

inline AffineElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  AffineElement w = AffineElement::identity(rs);
  for (int s : word) w = w * AffineElement::simple(rs, s);
  return w;
}

/**
 * The lexicographically smallest reduced word: repeatedly strip the
 * lowest-index left descent (equivalently, the lowest right descent of the
 * inverse).
 */
inline std::vector<int> reduced_word(const AffineElement& w) {
  std::vector<int> word;
  AffineElement cur = w.inverse();
  long long guard = length(w);
  while (!cur.is_identity()) {
    int s = -1;
    for (int i = 0; i <= cur.system().rank(); ++i)
      if (!cur.act(simple_affine_root(cur.system(), i)).positive()) {
        s = i;
        break;
      }
    if (s < 0 || static_cast<long long>(word.size()) >= guard)
      throw Error("internal: descent search failed");
    cur = cur * AffineElement::simple(cur.system(), s);
    word.push_back(s);
  }
  return word;
}

/**
 * Inversion set N(w) = {positive affine roots beta : w^{-1}(beta) < 0},
 * produced from a reduced word w = s_{i1}...s_{il} as
 * {a_{i1}, s_{i1}(a_{i2}), s_{i1}s_{i2}(a_{i3}), ...}.  Sorted by (level,
 * sign, root index).
 */
inline std::vector<AffineRoot> inversions(const AffineElement& w) {
  const RootSystem& rs = w.system();
  std::vector<AffineRoot> out;
  AffineElement prefix = AffineElement::identity(rs);
  for (int s : reduced_word(w)) {
    out.push_back(prefix.act(simple_affine_root(rs, s)));
    prefix = prefix * AffineElement::simple(rs, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * Inversion set straight from the definition, enumerating candidate levels
 * up to max |<lambda, alpha>|.  Slower than `inversions`; used to
 * cross-check it.
 */
inline std::vector<AffineRoot> inversions_direct(const AffineElement& w) {
  const RootSystem& rs = w.system();
  AffineElement winv = w.inverse();
  long long maxlev = 0;
  for (int r = 0; r < rs.num_positive(); ++r) {
    long long p = rs.pairing(w.translation_part(), FiniteRoot(r, false));
    maxlev = std::max(maxlev, p < 0 ? -p : p);
  }
  std::vector<AffineRoot> out;
  for (int r = 0; r < rs.num_positive(); ++r) {
    for (int sign = 0; sign < 2; ++sign) {
      FiniteRoot f(r, sign == 1);
      for (int k = f.negative ? 1 : 0; k <= maxlev; ++k) {
        AffineRoot beta(f, k);
        if (!winv.act(beta).positive()) out.push_back(beta);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// N(w) boundary roots {-w(a_s) : s a right descent of w}; these are the
/// inversions whose reflection shortens w from the right.
inline std::vector<AffineRoot> nd_r(const AffineElement& w) {
  std::vector<AffineRoot> out;
  for (int s : right_descents(w)) out.push_back(-w.act(simple_affine_root(w.system(), s)));
  std::sort(out.begin(), out.end());
  return out;
}

/**
 * Reconstructs the unique element with inversion set N, by greedy peeling:
 * some simple affine root a_s must lie in N, and then
 * s(N \ {a_s}) is the inversion set of s*w.  Throws NotAnInversionSet when
 * the peeling gets stuck (which happens exactly when N is not biconvex).
 */
inline AffineElement element_from_inversions(const RootSystem& rs,
                                             const std::vector<AffineRoot>& roots) {
  std::set<AffineRoot> work;
  for (const AffineRoot& r : roots) {
    if (!r.positive())
      throw NotAnInversionSet("inversion sets contain only positive affine roots, got " +
                              affine_root_str(rs, r));
    work.insert(r);
  }
  std::vector<int> word;
  while (!work.empty()) {
    int s = -1;
    for (int i = 0; i <= rs.rank(); ++i)
      if (work.count(simple_affine_root(rs, i))) {
        s = i;
        break;
      }
    if (s < 0)
      throw NotAnInversionSet("peeling stuck: no simple affine root among " +
                              std::to_string(work.size()) + " remaining roots");
    work.erase(simple_affine_root(rs, s));
    AffineElement refl = AffineElement::simple(rs, s);
    std::set<AffineRoot> next;
    for (const AffineRoot& r : work) {
      AffineRoot img = refl.act(r);
      if (!img.positive()) throw Error("internal: peeling produced a negative root");
      next.insert(img);
    }
    work.swap(next);
    word.push_back(s);
  }
  return from_word(rs, word);
}

}  // namespace shilab
