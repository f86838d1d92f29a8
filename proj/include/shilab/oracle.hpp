#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "shilab/affine_weyl.hpp"
#include "shilab/ideals.hpp"
#include "shilab/shi.hpp"

namespace shilab {

/**
 * The ball {w : l(w) <= radius}, enumerated breadth-first and deduplicated.
 * Each layer holds the elements of exactly that length, sorted by their
 * canonical key, so iteration order is reproducible.
 */
struct BallOfW {
  const RootSystem* rs = nullptr;
  int radius = 0;
  std::vector<std::vector<AffineElement>> layers;

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& l : layers) n += l.size();
    return n;
  }

  /// Flat (layer-major) indexing; index order is by length, then key.
  const AffineElement& at(std::size_t flat) const {
    for (const auto& l : layers) {
      if (flat < l.size()) return l[flat];
      flat -= l.size();
    }
    throw Error("ball index out of range");
  }

  int length_of(std::size_t flat) const {
    for (std::size_t l = 0; l < layers.size(); ++l) {
      if (flat < layers[l].size()) return static_cast<int>(l);
      flat -= layers[l].size();
    }
    throw Error("ball index out of range");
  }
};

struct KeyHash {
  std::size_t operator()(const std::vector<long long>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (long long x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/**
 * Breadth-first enumeration of the affine Weyl group out to the given
 * radius.  Children are generated through the length-increasing simple
 * multiplications only (w -> ws with w(a_s) > 0), so each layer l holds
 * exactly the elements of length l.
 */
inline BallOfW bfs(const RootSystem& rs, int radius) {
  if (radius < 0) throw Error("ball radius must be nonnegative");
  BallOfW ball;
  ball.rs = &rs;
  ball.radius = radius;
  std::vector<AffineElement> simples;
  for (int s = 0; s <= rs.rank(); ++s) simples.push_back(AffineElement::simple(rs, s));

  std::unordered_set<std::vector<long long>, KeyHash> seen;
  ball.layers.push_back({AffineElement::identity(rs)});
  seen.insert(ball.layers[0][0].canonical_key());

  for (int l = 1; l <= radius; ++l) {
    std::vector<std::pair<std::vector<long long>, AffineElement>> next;
    for (const AffineElement& w : ball.layers[static_cast<std::size_t>(l - 1)]) {
      for (int s = 0; s <= rs.rank(); ++s) {
        if (!w.act(simple_affine_root(rs, s)).positive()) continue;  // shortens
        AffineElement child = w * simples[static_cast<std::size_t>(s)];
        std::vector<long long> key = child.canonical_key();
        if (seen.insert(key).second) next.emplace_back(std::move(key), std::move(child));
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<AffineElement> layer;
    layer.reserve(next.size());
    for (auto& [k, w] : next) layer.push_back(std::move(w));
    ball.layers.push_back(std::move(layer));
  }
  return ball;
}

/**
 * One fiber of the sign-type map over a ball: every element seen with that
 * sign type, plus the unique shortest one.  Flat indices refer to
 * BallOfW::at.
 */
struct Fiber {
  SignType sign_type;
  std::vector<std::size_t> members;
  std::size_t min_index = 0;  // flat index of the minimum
  long long min_length = 0;
};

/**
 * Groups a ball by sign type.  Throws MinimumNotUnique if any fiber has two
 * elements of the same minimal length — that would falsify the unique-
 * minimum property of Shi regions, which is exactly what this oracle exists
 * to test.
 */
inline std::vector<Fiber> fibers(const BallOfW& ball) {
  std::map<std::vector<int8_t>, Fiber> acc;
  std::size_t flat = 0;
  for (std::size_t l = 0; l < ball.layers.size(); ++l) {
    for (const AffineElement& w : ball.layers[l]) {
      SignType st = zeta(w);
      auto [it, fresh] = acc.try_emplace(st.entries);
      Fiber& f = it->second;
      if (fresh) {
        f.sign_type = st;
        f.min_index = flat;
        f.min_length = static_cast<long long>(l);
      } else if (static_cast<long long>(l) == f.min_length) {
        throw MinimumNotUnique("sign type " + sign_str(st) + " has two elements of length " +
                               std::to_string(l));
      }
      f.members.push_back(flat);
      ++flat;
    }
  }
  std::vector<Fiber> out;
  out.reserve(acc.size());
  for (auto& [k, f] : acc) out.push_back(std::move(f));
  return out;
}

/**
 * Radius needed before a ball provably contains the minimal element of
 * every dominant region: the length of the longest one, which belongs to
 * the full ideal (bracket powers are monotone in the ideal).
 */
inline long long sufficiency_bound(const RootSystem& rs) {
  return static_cast<long long>(l_set(rs, full_ideal(rs)).size());
}

/**
 * The per-fiber minima over the dominant sign types, sorted by canonical
 * key.  Requires the ball radius to reach sufficiency_bound, otherwise some
 * region could be missed entirely and the result would be silently wrong;
 * below the bound InsufficientRadius names the radius that suffices.
 */
inline std::vector<AffineElement> dominant_minima(const BallOfW& ball) {
  long long need = sufficiency_bound(*ball.rs);
  if (ball.radius < need)
    throw InsufficientRadius("ball radius " + std::to_string(ball.radius) +
                                 " cannot see every dominant region; need " +
                                 std::to_string(need),
                             need);
  std::vector<AffineElement> out;
  for (const Fiber& f : fibers(ball))
    if (is_dominant_sign(f.sign_type)) out.push_back(ball.at(f.min_index));
  std::sort(out.begin(), out.end(), [](const AffineElement& a, const AffineElement& b) {
    return a.canonical_key() < b.canonical_key();
  });
  return out;
}

/**
 * Brute-force witness search that an affine root beta is "small": for every
 * other positive affine root alpha of level <= level(beta) + 1, find some
 * ball element whose inversion set contains beta but not alpha.  A complete
 * certificate shows no such alpha is forced by beta.  For non-small beta
 * the forced roots come back in `unwitnessed`.
 */
struct SmallRootCertificate {
  AffineRoot beta;
  std::vector<std::pair<AffineRoot, std::vector<int>>> witnesses;
  std::vector<AffineRoot> unwitnessed;

  bool complete() const { return unwitnessed.empty(); }
};

inline SmallRootCertificate certify_small(const BallOfW& ball, const AffineRoot& beta) {
  const RootSystem& rs = *ball.rs;
  if (!beta.positive()) throw Error("certify_small expects a positive affine root");

  std::vector<AffineRoot> probes;
  for (int r = 0; r < rs.num_positive(); ++r)
    for (int sign = 0; sign < 2; ++sign) {
      FiniteRoot f(r, sign == 1);
      for (int k = f.negative ? 1 : 0; k <= beta.level + 1; ++k)
        if (AffineRoot(f, k) != beta) probes.push_back(AffineRoot(f, k));
    }
  std::sort(probes.begin(), probes.end());

  SmallRootCertificate cert;
  cert.beta = beta;
  std::map<AffineRoot, std::vector<int>> found;
  for (std::size_t l = 0; l < ball.layers.size() && found.size() < probes.size(); ++l) {
    for (const AffineElement& w : ball.layers[l]) {
      std::vector<AffineRoot> n = inversions(w);
      if (!std::binary_search(n.begin(), n.end(), beta)) continue;
      for (const AffineRoot& alpha : probes) {
        if (found.count(alpha)) continue;
        if (!std::binary_search(n.begin(), n.end(), alpha)) found[alpha] = reduced_word(w);
      }
      if (found.size() == probes.size()) break;
    }
  }
  for (const AffineRoot& alpha : probes) {
    auto it = found.find(alpha);
    if (it == found.end())
      cert.unwitnessed.push_back(alpha);
    else
      cert.witnesses.emplace_back(alpha, it->second);
  }
  return cert;
}

// --- Orbit counting on torsion quotients -----------------------------------

enum class LatticeKind { Root, Coroot };

/**
 * Number of W_0-orbits on L/(h+1)L for L the root or coroot lattice,
 * counted by direct orbit sweep over all (h+1)^rank residue classes.  The
 * coroot count matches the ideal count (that equality is the orbit-side
 * description of the Shi/ideal enumeration); both lattices are offered so
 * the agreement itself can be interrogated per type.
 */
inline long long orbit_count(const RootSystem& rs, LatticeKind kind) {
  const int n = rs.rank();
  const long long mod = rs.coxeter_number() + 1;
  long long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= mod;
    if (total > 200'000'000LL) throw Error("orbit enumeration too large for " +
                                           rs.cartan().to_string());
  }

  // Generator matrices: images of the basis under each simple reflection,
  // in the chosen basis (columns = images).
  std::vector<std::vector<std::vector<long long>>> gen(
      static_cast<std::size_t>(n),
      std::vector<std::vector<long long>>(static_cast<std::size_t>(n),
                                          std::vector<long long>(static_cast<std::size_t>(n))));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FiniteRoot f = rs.reflect(i, FiniteRoot(j, false));
      long long sign = f.negative ? -1 : 1;
      for (int k = 0; k < n; ++k) {
        long long c = kind == LatticeKind::Root ? rs.root(f.index).simple[k]
                                                : rs.coroot_coords(f.index)[k];
        gen[i][j][k] = sign * c;
      }
    }

  std::vector<bool> visited(static_cast<std::size_t>(total), false);
  std::vector<long long> point(static_cast<std::size_t>(n)), image(static_cast<std::size_t>(n));
  std::vector<long long> stack;
  long long orbits = 0;

  auto decode = [&](long long code) {
    for (int k = 0; k < n; ++k) {
      point[static_cast<std::size_t>(k)] = code % mod;
      code /= mod;
    }
  };
  auto encode_image = [&]() {
    long long code = 0;
    for (int k = n - 1; k >= 0; --k)
      code = code * mod + image[static_cast<std::size_t>(k)];
    return code;
  };

  for (long long start = 0; start < total; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    ++orbits;
    visited[static_cast<std::size_t>(start)] = true;
    stack.assign(1, start);
    while (!stack.empty()) {
      long long code = stack.back();
      stack.pop_back();
      for (int i = 0; i < n; ++i) {
        decode(code);
        for (int k = 0; k < n; ++k) {
          long long v = 0;
          for (int j = 0; j < n; ++j)
            v += gen[i][j][k] * point[static_cast<std::size_t>(j)];
          v %= mod;
          if (v < 0) v += mod;
          image[static_cast<std::size_t>(k)] = v;
        }
        long long img = encode_image();
        if (!visited[static_cast<std::size_t>(img)]) {
          visited[static_cast<std::size_t>(img)] = true;
          stack.push_back(img);
        }
      }
    }
  }
  return orbits;
}

/**
 * Whether the set of sign types realized in the ball has stopped growing
 * before the outermost layer, and how the total compares against the
 * expected (h+1)^rank.  A stabilized count that misses the expected value
 * is a defect; an unstabilized ball is merely inconclusive.
 */
struct StabilizationReport {
  bool stabilized = false;
  long long distinct = 0;
  long long expected = 0;
  int last_new_layer = 0;

  bool consistent() const { return !stabilized || distinct == expected; }
};

inline StabilizationReport check_stabilization(const BallOfW& ball) {
  StabilizationReport rep;
  const RootSystem& rs = *ball.rs;
  rep.expected = 1;
  for (int i = 0; i < rs.rank(); ++i) rep.expected *= rs.coxeter_number() + 1;

  std::unordered_set<std::string> seen;
  for (std::size_t l = 0; l < ball.layers.size(); ++l)
    for (const AffineElement& w : ball.layers[l])
      if (seen.insert(sign_str(zeta(w))).second)
        rep.last_new_layer = static_cast<int>(l);
  rep.distinct = static_cast<long long>(seen.size());
  rep.stabilized = ball.radius > 0 && rep.last_new_layer < ball.radius;
  return rep;
}

}  // namespace shilab
