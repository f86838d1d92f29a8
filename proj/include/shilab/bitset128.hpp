#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace shilab {

/**
 * Set of positive-root indices as a fixed 128-bit mask.  Every root system
 * this library constructs has at most 128 positive roots (E8 has 120), so a
 * pair of machine words covers all of them; set algebra on ideals and
 * antichains is then a handful of bitwise ops.
 */
struct RootSet {
  std::uint64_t lo = 0, hi = 0;

  static RootSet single(int i) {
    RootSet s;
    s.set(i);
    return s;
  }

  bool test(int i) const {
    return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
  }
  void set(int i) {
    if (i < 64)
      lo |= std::uint64_t(1) << i;
    else
      hi |= std::uint64_t(1) << (i - 64);
  }
  void reset(int i) {
    if (i < 64)
      lo &= ~(std::uint64_t(1) << i);
    else
      hi &= ~(std::uint64_t(1) << (i - 64));
  }

  int count() const { return std::popcount(lo) + std::popcount(hi); }
  bool empty() const { return lo == 0 && hi == 0; }
  bool any() const { return !empty(); }

  /// Smallest member index >= from, or -1 when none.
  int next(int from = 0) const {
    if (from < 64) {
      std::uint64_t m = lo & (from == 0 ? ~std::uint64_t(0)
                                        : ~std::uint64_t(0) << from);
      if (m) return std::countr_zero(m);
      from = 64;
    }
    std::uint64_t m =
        hi & (from == 64 ? ~std::uint64_t(0) : ~std::uint64_t(0) << (from - 64));
    if (m) return 64 + std::countr_zero(m);
    return -1;
  }

  friend RootSet operator|(RootSet a, RootSet b) {
    return RootSet{a.lo | b.lo, a.hi | b.hi};
  }
  friend RootSet operator&(RootSet a, RootSet b) {
    return RootSet{a.lo & b.lo, a.hi & b.hi};
  }
  /// Set difference a \ b.
  friend RootSet operator-(RootSet a, RootSet b) {
    return RootSet{a.lo & ~b.lo, a.hi & ~b.hi};
  }
  RootSet& operator|=(RootSet b) {
    lo |= b.lo;
    hi |= b.hi;
    return *this;
  }
  RootSet& operator&=(RootSet b) {
    lo &= b.lo;
    hi &= b.hi;
    return *this;
  }

  bool contains_all(RootSet b) const { return (b - *this).empty(); }
  bool intersects(RootSet b) const { return !(*this & b).empty(); }

  friend bool operator==(const RootSet&, const RootSet&) = default;
  friend std::strong_ordering operator<=>(const RootSet& a, const RootSet& b) {
    if (a.hi != b.hi) return a.hi <=> b.hi;
    return a.lo <=> b.lo;
  }
};

}  // namespace shilab
