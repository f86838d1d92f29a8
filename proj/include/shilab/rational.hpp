#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "shilab/errors.hpp"

namespace shilab {

// Exact arithmetic everywhere: root coordinates, inner products and the
// simplex pivots all use arbitrary-precision rationals, so no tolerance
// parameters appear anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec negated(const Vec& a) {
  Vec r(a);
  for (auto& x : r) x = -x;
  return r;
}

inline Vec scaled(const Rat& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

/// True if q is an integer (denominator 1 after normalization).
inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Convert an integral rational to long long; throws if not integral.
inline long long to_int(const Rat& q) {
  if (!is_integer(q)) throw Error("expected an integer, got " + q.str());
  return static_cast<long long>(numerator(q));
}

/// Renders "p/q", or just "p" when integral.
inline std::string rat_str(const Rat& q) { return q.str(); }

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_str(v[i]);
  }
  return s + ")";
}

/// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw FormatError("cannot parse rational: '" + s + "'");
  }
}

}  // namespace shilab
