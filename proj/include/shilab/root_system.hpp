#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shilab/bitset128.hpp"
#include "shilab/cartan.hpp"
#include "shilab/errors.hpp"
#include "shilab/rational.hpp"

namespace shilab {

/**
 * A positive root, carried in two coordinate systems at once: exact ambient
 * coordinates (the classical models: A_n lives in the sum-zero hyperplane of
 * R^{n+1}, B/C/D in R^n, G2/F4/E in R^3/R^4/R^8) and integer coordinates in
 * the simple-root basis.  `height` is the coordinate sum in the simple
 * basis, `index` the position in the canonical order.
 */
struct Root {
  Vec ambient;
  std::vector<int> simple;
  int height = 0;
  int index = -1;
};

/**
 * A root of the full (finite) system, referenced as a signed positive root:
 * `index` into the positive roots, negated when `negative` is set.
 */
struct FiniteRoot {
  int index = -1;
  bool negative = false;

  FiniteRoot() = default;
  FiniteRoot(int i, bool neg) : index(i), negative(neg) {}

  FiniteRoot operator-() const { return FiniteRoot(index, !negative); }
  friend bool operator==(const FiniteRoot&, const FiniteRoot&) = default;
  friend auto operator<=>(const FiniteRoot& a, const FiniteRoot& b) {
    if (a.negative != b.negative) return a.negative <=> b.negative;
    return a.index <=> b.index;
  }
};

/**
 * Finite crystallographic root system of an irreducible Cartan type.
 *
 * Positive roots are materialized once by closing the simple roots under the
 * simple reflections, then frozen in a canonical order: ascending height,
 * ties broken by descending lexicographic order of simple-basis coordinates.
 * That puts the simple roots first as alpha_1..alpha_n and, in type A, lists
 * each height row e_{1,1+h}, e_{2,2+h}, ... left to right.
 *
 * All derived tables (coroots, pairings, reflection images, root sums, the
 * dominance order) are precomputed; lookups after construction are O(1) or
 * O(rank).
 */
class RootSystem {
 public:
  explicit RootSystem(CartanType type) : type_(type) {
    type_.validate();
    build_roots();
    build_tables();
    self_check();
  }

  const CartanType& cartan() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return dim_; }
  int num_positive() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& root(int i) const { return roots_.at(static_cast<std::size_t>(i)); }

  int highest_root_index() const { return highest_; }
  const Root& highest_root() const { return roots_[static_cast<std::size_t>(highest_)]; }

  /// Coxeter number h = height(highest root) + 1.
  int coxeter_number() const { return coxeter_; }

  /// Exponents e_1 <= ... <= e_n, recovered from the height distribution of
  /// the positive roots (Kostant: the exponents are the conjugate partition
  /// of (#roots of height 1, #roots of height 2, ...)).
  const std::vector<int>& exponents() const { return exponents_; }

  /// |W| = prod (e_i + 1).
  long long weyl_order() const { return weyl_order_; }

  // --- bilinear data ------------------------------------------------------

  Rat inner(int a, int b) const { return dot(roots_[a].ambient, roots_[b].ambient); }
  const Rat& squared_length(int a) const { return len2_[a]; }

  /// Coroot 2*beta/<beta,beta> in ambient coordinates.
  Vec coroot_ambient(int a) const {
    return scaled(Rat(2) / len2_[a], roots_[a].ambient);
  }

  /// Coordinates of the coroot in the simple-coroot basis (always integers).
  const std::vector<int>& coroot_coords(int a) const { return coroot_coords_[a]; }

  /// <alpha_i^vee, beta_r> for simple index i in [0, rank).
  int pairing(int i, int r) const { return pairing_[i][r]; }

  /// <lambda, beta> for lambda given in simple-coroot coordinates.
  long long pairing(const std::vector<long long>& lambda, FiniteRoot r) const {
    long long s = 0;
    for (int i = 0; i < rank_; ++i) s += lambda[i] * pairing_[i][r.index];
    return r.negative ? -s : s;
  }

  // --- combinatorial structure -------------------------------------------

  /// Index of beta_a + beta_b when that sum is again a (positive) root.
  std::optional<int> add_roots(int a, int b) const {
    int s = sum_[a][static_cast<std::size_t>(b)];
    return s < 0 ? std::nullopt : std::optional<int>(s);
  }

  /// Sum of two signed roots, when it is again a root.
  std::optional<FiniteRoot> add_signed(FiniteRoot a, FiniteRoot b) const {
    std::vector<int> c(static_cast<std::size_t>(rank_));
    const std::vector<int>& ca = roots_[static_cast<std::size_t>(a.index)].simple;
    const std::vector<int>& cb = roots_[static_cast<std::size_t>(b.index)].simple;
    for (int k = 0; k < rank_; ++k)
      c[k] = (a.negative ? -ca[k] : ca[k]) + (b.negative ? -cb[k] : cb[k]);
    return find_by_simple_signed(c);
  }

  /// Dominance (root) order: a <= b iff b - a is a nonnegative combination
  /// of simple roots.
  bool poset_leq(int a, int b) const { return up_[a].test(b); }

  int height(int a) const { return roots_[a].height; }

  RootSet up_mask(int a) const { return up_[a]; }           // {b : a <= b}
  RootSet down_mask(int a) const { return down_[a]; }       // {b : b <= a}
  RootSet comparable_mask(int a) const { return up_[a] | down_[a]; }
  RootSet full_mask() const {
    RootSet s;
    for (int i = 0; i < num_positive(); ++i) s.set(i);
    return s;
  }

  /// Image of a root under the simple reflection s_{alpha_i}, i in [0, rank).
  FiniteRoot reflect(int i, FiniteRoot r) const {
    FiniteRoot img(static_cast<int>(refl_[i][r.index]), false);
    int idx = img.index;
    if (idx < 0) {
      img.index = -idx - 1;
      img.negative = true;
    } else {
      img.index = idx - 1;
    }
    if (r.negative) img = -img;
    return img;
  }

  /// Finds the positive root with the given simple-basis coordinates.
  std::optional<int> index_by_simple(const std::vector<int>& coords) const {
    auto it = index_by_coords_.find(coords);
    if (it == index_by_coords_.end()) return std::nullopt;
    return it->second;
  }

  /// Finds a root (either sign) by signed simple-basis coordinates.
  std::optional<FiniteRoot> find_by_simple_signed(const std::vector<int>& coords) const {
    bool nonneg = true, nonpos = true, zero = true;
    for (int c : coords) {
      if (c > 0) nonpos = false;
      if (c < 0) nonneg = false;
      if (c != 0) zero = false;
    }
    if (zero) return std::nullopt;
    if (nonneg) {
      auto i = index_by_simple(coords);
      if (!i) return std::nullopt;
      return FiniteRoot(*i, false);
    }
    if (nonpos) {
      std::vector<int> neg(coords);
      for (int& c : neg) c = -c;
      auto i = index_by_simple(neg);
      if (!i) return std::nullopt;
      return FiniteRoot(*i, true);
    }
    return std::nullopt;
  }

  // --- naming --------------------------------------------------------------

  /**
   * Human-readable root name.  In type A with at most 9 ambient coordinates
   * the root e_i - e_j is written "eij" ("e23"), and its negative "e32".
   * Everywhere else the signed simple-basis coordinates are used:
   * "[1,2,0]", "[-1,0,0]".
   */
  std::string root_name(FiniteRoot r) const {
    const Root& b = roots_[static_cast<std::size_t>(r.index)];
    if (type_.family == Family::A && dim_ <= 9) {
      int i = -1, j = -1;
      for (int k = 0; k < dim_; ++k) {
        if (b.ambient[k] == 1) i = k + 1;
        if (b.ambient[k] == -1) j = k + 1;
      }
      if (r.negative) std::swap(i, j);
      return "e" + std::to_string(i) + std::to_string(j);
    }
    std::string s = "[";
    for (int k = 0; k < rank_; ++k) {
      if (k) s += ",";
      s += std::to_string(r.negative ? -b.simple[k] : b.simple[k]);
    }
    return s + "]";
  }

  std::string root_name(int positive_index) const {
    return root_name(FiniteRoot(positive_index, false));
  }

  /// Inverse of root_name; accepts both the "eij" and the "[c1,...]" form.
  FiniteRoot parse_root(const std::string& name) const {
    if (name.size() >= 3 && name[0] == 'e' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return c >= '1' && c <= '9'; })) {
      if (type_.family != Family::A || name.size() != 3)
        throw FormatError("root name '" + name + "' is only valid in type A");
      int i = name[1] - '0', j = name[2] - '0';
      if (i == j || i > dim_ || j > dim_)
        throw FormatError("root name '" + name + "' out of range for " +
                          type_.to_string());
      std::vector<int> coords(static_cast<std::size_t>(rank_), 0);
      for (int k = std::min(i, j); k < std::max(i, j); ++k) coords[k - 1] = i < j ? 1 : -1;
      auto r = find_by_simple_signed(coords);
      if (!r) throw FormatError("'" + name + "' is not a root of " + type_.to_string());
      return *r;
    }
    if (name.size() >= 2 && name.front() == '[' && name.back() == ']') {
      std::vector<int> coords;
      std::string body = name.substr(1, name.size() - 2);
      std::size_t pos = 0;
      while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        try {
          coords.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw FormatError("cannot parse root coordinates '" + name + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (static_cast<int>(coords.size()) != rank_)
        throw FormatError("root '" + name + "' has " + std::to_string(coords.size()) +
                          " coordinates, expected " + std::to_string(rank_));
      auto r = find_by_simple_signed(coords);
      if (!r) throw FormatError("'" + name + "' is not a root of " + type_.to_string());
      return *r;
    }
    throw FormatError("cannot parse root name '" + name + "'");
  }

 private:
  CartanType type_;
  int rank_ = 0, dim_ = 0, coxeter_ = 0, highest_ = -1;
  long long weyl_order_ = 1;
  std::vector<Root> roots_;
  std::vector<Rat> len2_;
  std::vector<int> exponents_;
  std::vector<std::vector<int>> pairing_;        // [simple][root]
  std::vector<std::vector<int16_t>> refl_;       // [simple][root], +-(idx+1)
  std::vector<std::vector<int16_t>> sum_;        // [root][root], -1 = not a root
  std::vector<std::vector<int>> coroot_coords_;  // [root] -> simple-coroot basis
  std::vector<RootSet> up_, down_;
  std::map<std::vector<int>, int> index_by_coords_;

  static std::vector<Vec> simple_system(CartanType t, int& dim) {
    const int n = t.rank;
    auto unit = [](int i, int d) {
      Vec v(static_cast<std::size_t>(d), Rat(0));
      v[static_cast<std::size_t>(i)] = 1;
      return v;
    };
    std::vector<Vec> simples;
    switch (t.family) {
      case Family::A: {
        dim = n + 1;
        for (int i = 0; i < n; ++i)
          simples.push_back(sub(unit(i, dim), unit(i + 1, dim)));
        break;
      }
      case Family::B: {
        dim = n;
        for (int i = 0; i + 1 < n; ++i)
          simples.push_back(sub(unit(i, dim), unit(i + 1, dim)));
        simples.push_back(unit(n - 1, dim));
        break;
      }
      case Family::C: {
        dim = n;
        for (int i = 0; i + 1 < n; ++i)
          simples.push_back(sub(unit(i, dim), unit(i + 1, dim)));
        simples.push_back(scaled(2, unit(n - 1, dim)));
        break;
      }
      case Family::D: {
        dim = n;
        for (int i = 0; i + 1 < n; ++i)
          simples.push_back(sub(unit(i, dim), unit(i + 1, dim)));
        simples.push_back(add(unit(n - 2, dim), unit(n - 1, dim)));
        break;
      }
      case Family::G: {
        dim = 3;
        simples.push_back(sub(unit(0, dim), unit(1, dim)));
        Vec a2(3, Rat(0));
        a2[0] = -2;
        a2[1] = 1;
        a2[2] = 1;
        simples.push_back(a2);
        break;
      }
      case Family::F: {
        dim = 4;
        simples.push_back(sub(unit(1, dim), unit(2, dim)));
        simples.push_back(sub(unit(2, dim), unit(3, dim)));
        simples.push_back(unit(3, dim));
        Vec a4(4, Rat(1, 2));
        a4[1] = Rat(-1, 2);
        a4[2] = Rat(-1, 2);
        a4[3] = Rat(-1, 2);
        simples.push_back(a4);
        break;
      }
      case Family::E: {
        dim = 8;
        Vec a1(8, Rat(-1, 2));
        a1[0] = Rat(1, 2);
        a1[7] = Rat(1, 2);
        simples.push_back(a1);
        simples.push_back(add(unit(0, dim), unit(1, dim)));
        simples.push_back(sub(unit(1, dim), unit(0, dim)));
        for (int i = 0; i + 3 < n; ++i)
          simples.push_back(sub(unit(i + 2, dim), unit(i + 1, dim)));
        break;
      }
    }
    return simples;
  }

  void build_roots() {
    rank_ = type_.rank;
    std::vector<Vec> simples = simple_system(type_, dim_);

    // Close the simple roots under the simple reflections.  Every root is
    // W-conjugate to a simple one, so the orbit is the whole system.
    std::map<std::vector<int>, Vec> seen;
    std::deque<std::pair<std::vector<int>, Vec>> queue;
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> c(static_cast<std::size_t>(rank_), 0);
      c[static_cast<std::size_t>(i)] = 1;
      seen.emplace(c, simples[static_cast<std::size_t>(i)]);
      queue.emplace_back(c, simples[static_cast<std::size_t>(i)]);
    }
    std::vector<Rat> simple_len2(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
      simple_len2[i] = dot(simples[i], simples[i]);

    while (!queue.empty()) {
      auto [c, v] = queue.front();
      queue.pop_front();
      for (int i = 0; i < rank_; ++i) {
        Rat p = 2 * dot(v, simples[i]) / simple_len2[i];
        if (!is_integer(p))
          throw ConstructionError("non-integral Cartan pairing in " + type_.to_string());
        long long pi = to_int(p);
        if (pi == 0) continue;
        std::vector<int> c2(c);
        c2[static_cast<std::size_t>(i)] -= static_cast<int>(pi);
        Vec v2 = sub(v, scaled(Rat(pi), simples[i]));
        if (seen.emplace(c2, v2).second) queue.emplace_back(c2, v2);
      }
    }

    for (auto& [c, v] : seen) {
      bool pos = true, neg = true;
      for (int x : c) {
        if (x < 0) pos = false;
        if (x > 0) neg = false;
      }
      if (!pos && !neg)
        throw ConstructionError("mixed-sign root generated in " + type_.to_string());
      if (!pos) continue;
      Root r;
      r.ambient = v;
      r.simple = c;
      for (int x : c) r.height += x;
      roots_.push_back(std::move(r));
    }
    if (static_cast<int>(seen.size()) != 2 * static_cast<int>(roots_.size()))
      throw ConstructionError("root count mismatch in " + type_.to_string());
    if (roots_.size() > 128)
      throw ConstructionError(type_.to_string() + " has more than 128 positive roots");

    std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
      if (a.height != b.height) return a.height < b.height;
      return a.simple > b.simple;  // descending lex puts alpha_1 first
    });
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      roots_[i].index = static_cast<int>(i);
      index_by_coords_[roots_[i].simple] = static_cast<int>(i);
    }
  }

  void build_tables() {
    const int m = num_positive();
    len2_.resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) len2_[r] = dot(roots_[r].ambient, roots_[r].ambient);

    pairing_.assign(static_cast<std::size_t>(rank_),
                    std::vector<int>(static_cast<std::size_t>(m), 0));
    refl_.assign(static_cast<std::size_t>(rank_),
                 std::vector<int16_t>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < rank_; ++i) {
      for (int r = 0; r < m; ++r) {
        Rat p = 2 * dot(roots_[r].ambient, roots_[i].ambient) / len2_[i];
        if (!is_integer(p))
          throw ConstructionError("non-integral pairing in " + type_.to_string());
        pairing_[i][r] = static_cast<int>(to_int(p));
        std::vector<int> c(roots_[r].simple);
        c[static_cast<std::size_t>(i)] -= pairing_[i][r];
        auto img = find_by_simple_signed(c);
        if (!img)
          throw ConstructionError("reflection image is not a root in " + type_.to_string());
        refl_[i][r] = static_cast<int16_t>(img->negative ? -(img->index + 1)
                                                         : img->index + 1);
      }
    }

    sum_.assign(static_cast<std::size_t>(m),
                std::vector<int16_t>(static_cast<std::size_t>(m), -1));
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        std::vector<int> c(roots_[a].simple);
        for (int k = 0; k < rank_; ++k) c[k] += roots_[b].simple[k];
        auto i = index_by_simple(c);
        if (i) sum_[a][b] = static_cast<int16_t>(*i);
      }
    }

    up_.assign(static_cast<std::size_t>(m), RootSet{});
    down_.assign(static_cast<std::size_t>(m), RootSet{});
    for (int a = 0; a < m; ++a) {
      for (int b = 0; b < m; ++b) {
        bool leq = true;
        for (int k = 0; k < rank_ && leq; ++k)
          leq = roots_[a].simple[k] <= roots_[b].simple[k];
        if (leq) {
          up_[a].set(b);
          down_[b].set(a);
        }
      }
    }

    coroot_coords_.resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
      std::vector<int>& cc = coroot_coords_[r];
      cc.resize(static_cast<std::size_t>(rank_));
      for (int i = 0; i < rank_; ++i) {
        Rat q = Rat(roots_[r].simple[i]) * len2_[roots_[i].index] / len2_[r];
        if (!is_integer(q))
          throw ConstructionError("non-integral coroot coordinate in " + type_.to_string());
        cc[i] = static_cast<int>(to_int(q));
      }
    }

    int max_h = 0;
    for (int r = 0; r < m; ++r) max_h = std::max(max_h, roots_[r].height);
    coxeter_ = max_h + 1;
    int count_max = 0;
    for (int r = 0; r < m; ++r)
      if (roots_[r].height == max_h) {
        highest_ = r;
        ++count_max;
      }
    if (count_max != 1)
      throw ConstructionError("highest root is not unique in " + type_.to_string());

    // Height distribution -> exponents by partition conjugation.
    std::vector<int> dist(static_cast<std::size_t>(max_h) + 1, 0);
    for (int r = 0; r < m; ++r) ++dist[static_cast<std::size_t>(roots_[r].height)];
    for (int h = 1; h < max_h; ++h)
      if (dist[h] < dist[h + 1])
        throw ConstructionError("height distribution is not a partition in " +
                                type_.to_string());
    exponents_.clear();
    for (int j = 1; j <= dist[1]; ++j) {
      int e = 0;
      for (int h = 1; h <= max_h; ++h)
        if (dist[h] >= j) e = h;
      exponents_.push_back(e);
    }
    std::sort(exponents_.begin(), exponents_.end());
    weyl_order_ = 1;
    for (int e : exponents_) weyl_order_ *= e + 1;
  }

  void self_check() const {
    const int m = num_positive();
    if (static_cast<int>(exponents_.size()) != rank_)
      throw ConstructionError("exponent count mismatch in " + type_.to_string());
    long long esum = 0;
    for (int e : exponents_) esum += e;
    if (esum != m || 2 * m != rank_ * coxeter_)
      throw ConstructionError("|Phi+| != n*h/2 in " + type_.to_string());
    // The highest root must dominate everything.
    for (int r = 0; r < m; ++r)
      if (!poset_leq(r, highest_))
        throw ConstructionError("highest root is not the poset maximum in " +
                                type_.to_string());
  }
};

}  // namespace shilab
