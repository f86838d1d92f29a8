#pragma once

#include <cctype>
#include <string>

#include "shilab/errors.hpp"

namespace shilab {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

/**
 * An irreducible crystallographic Cartan type, e.g. A3 or G2.
 *
 * Rank constraints are the classical ones (A_n n>=1, B_n n>=2, C_n n>=2,
 * D_n n>=3, E_{6,7,8}, F_4, G_2); D_3 is allowed and is isomorphic to A_3.
 * In addition the rank is capped so that the number of positive roots fits
 * the 128-bit set type (A<=15, B/C<=11, D<=11 — E8's 120 is the largest
 * exceptional case).
 */
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  void validate() const {
    const int n = rank;
    bool ok = false;
    switch (family) {
      case Family::A: ok = n >= 1 && n <= 15; break;
      case Family::B: ok = n >= 2 && n <= 11; break;
      case Family::C: ok = n >= 2 && n <= 11; break;
      case Family::D: ok = n >= 3 && n <= 11; break;
      case Family::E: ok = n == 6 || n == 7 || n == 8; break;
      case Family::F: ok = n == 4; break;
      case Family::G: ok = n == 2; break;
    }
    if (!ok)
      throw ConstructionError("invalid Cartan type " + to_string() +
                              " (unsupported rank for this family)");
  }

  std::string to_string() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
  }

  static CartanType parse(const std::string& family, int rank) {
    if (family.size() != 1)
      throw ConstructionError("invalid family '" + family + "'");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(family[0])));
    if (c < 'A' || c > 'G')
      throw ConstructionError("invalid family '" + family + "'");
    CartanType t{static_cast<Family>(c), rank};
    t.validate();
    return t;
  }

  /// Parses the compact form "A3", "g2", ...
  static CartanType parse(const std::string& compact) {
    if (compact.size() < 2)
      throw ConstructionError("invalid Cartan type '" + compact + "'");
    int rank = 0;
    try {
      rank = std::stoi(compact.substr(1));
    } catch (const std::exception&) {
      throw ConstructionError("invalid Cartan type '" + compact + "'");
    }
    return parse(compact.substr(0, 1), rank);
  }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

}  // namespace shilab
