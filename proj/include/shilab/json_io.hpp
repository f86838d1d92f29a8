#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "shilab/affine_weyl.hpp"
#include "shilab/ideals.hpp"
#include "shilab/oracle.hpp"
#include "shilab/shi.hpp"

namespace shilab {

// Insertion-ordered JSON keeps every serialization byte-stable.
using Json = nlohmann::ordered_json;

inline Json root_json(const RootSystem& rs, FiniteRoot r) { return rs.root_name(r); }

inline FiniteRoot root_from_json(const RootSystem& rs, const Json& j) {
  if (j.is_string()) return rs.parse_root(j.get<std::string>());
  if (j.is_array()) {
    std::vector<int> coords = j.get<std::vector<int>>();
    auto f = rs.find_by_simple_signed(coords);
    if (!f) throw FormatError("coordinates " + j.dump() + " are not a root");
    return *f;
  }
  throw FormatError("cannot read a root from " + j.dump());
}

inline Json affine_root_json(const RootSystem& rs, const AffineRoot& r) {
  return affine_root_str(rs, r);
}

inline AffineRoot affine_root_from_json(const RootSystem& rs, const Json& j) {
  if (j.is_string()) return parse_affine_root(rs, j.get<std::string>());
  if (j.is_object())
    return AffineRoot(root_from_json(rs, j.at("root")), j.at("level").get<int>());
  throw FormatError("cannot read an affine root from " + j.dump());
}

inline Json root_set_json(const RootSystem& rs, RootSet s) {
  Json arr = Json::array();
  for (int r = s.next(0); r >= 0; r = s.next(r + 1)) arr.push_back(rs.root_name(r));
  return arr;
}

inline RootSet root_set_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_array()) throw FormatError("expected an array of roots");
  RootSet s;
  for (const Json& e : j) {
    FiniteRoot f = root_from_json(rs, e);
    if (f.negative) throw FormatError("expected positive roots only");
    s.set(f.index);
  }
  return s;
}

inline Json antichain_json(const RootSystem& rs, const Antichain& a) {
  return root_set_json(rs, a.roots);
}

inline Antichain antichain_from_json(const RootSystem& rs, const Json& j) {
  return make_antichain(rs, root_set_from_json(rs, j));
}

inline Json ideal_json(const RootSystem& rs, const RootIdeal& i) {
  return root_set_json(rs, i.roots);
}

inline RootIdeal ideal_from_json(const RootSystem& rs, const Json& j) {
  return make_ideal(rs, root_set_from_json(rs, j));
}

inline Json sign_type_json(const SignType& st) { return sign_str(st); }

inline SignType sign_type_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_string()) throw FormatError("expected a sign-type string");
  return parse_sign_type(rs, j.get<std::string>());
}

inline Json kvector_json(const KVector& k) { return Json(k); }

/**
 * Elements serialize with all three descriptions: a reduced word, the
 * simple-root images of the finite part (signed simple-basis coordinates),
 * and the translation in simple-coroot coordinates.  Parsing prefers the
 * word and cross-checks the other two when present.
 */
inline Json element_json(const AffineElement& w) {
  const RootSystem& rs = w.system();
  Json j;
  j["word"] = reduced_word(w);
  Json imgs = Json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    FiniteRoot f = w.finite_part().apply(FiniteRoot(i, false));
    std::vector<int> coords = rs.root(f.index).simple;
    if (f.negative)
      for (int& c : coords) c = -c;
    imgs.push_back(coords);
  }
  j["u"] = imgs;
  j["lambda"] = w.translation_part();
  return j;
}

inline AffineElement element_from_json(const RootSystem& rs, const Json& j) {
  if (!j.is_object()) throw FormatError("expected an element object");
  bool have_parts = j.contains("u") && j.contains("lambda");
  AffineElement w = AffineElement::identity(rs);
  if (j.contains("word")) {
    std::vector<int> word = j.at("word").get<std::vector<int>>();
    for (int s : word)
      if (s < 0 || s > rs.rank())
        throw FormatError("word letter " + std::to_string(s) + " out of range");
    w = from_word(rs, word);
  } else if (!have_parts) {
    throw FormatError("element needs either a word or u+lambda");
  }
  if (have_parts) {
    std::vector<FiniteRoot> imgs;
    for (const Json& e : j.at("u")) {
      std::vector<int> coords = e.get<std::vector<int>>();
      auto f = rs.find_by_simple_signed(coords);
      if (!f) throw FormatError("u image " + e.dump() + " is not a root");
      imgs.push_back(*f);
    }
    AffineElement v(rs, FiniteWeylElement::from_simple_images(rs, imgs),
                    j.at("lambda").get<std::vector<long long>>());
    if (j.contains("word") && !(v == w))
      throw FormatError("element word and (u, lambda) disagree");
    w = v;
  }
  return w;
}

inline Json affine_root_list_json(const RootSystem& rs, const std::vector<AffineRoot>& v) {
  Json arr = Json::array();
  for (const AffineRoot& r : v) arr.push_back(affine_root_str(rs, r));
  return arr;
}

inline Json halfspace_json(const RootSystem& rs, const Halfspace& h) {
  Json j;
  j["root"] = rs.root_name(h.root);
  j["rel"] = h.upper ? "<" : ">";
  j["bound"] = h.bound;
  return j;
}

inline Json region_json(const RootSystem& rs, const DominantRegion& region) {
  Json j;
  j["sign_type"] = sign_str(region.sign_type);
  j["antichain"] = antichain_json(rs, region.antichain);
  j["ideal"] = ideal_json(rs, region.ideal);
  j["minimal_element"] = element_json(region.minimal_element);
  j["length"] = length(region.minimal_element);
  j["k"] = kvector_json(shi_coefficients(region.minimal_element));
  j["descent_roots"] = affine_root_list_json(rs, region.descent_roots());
  Json walls = Json::array();
  for (const Halfspace& h : region.walls) walls.push_back(halfspace_json(rs, h));
  j["walls"] = walls;
  return j;
}

inline Json certificate_json(const RootSystem& rs, const SmallRootCertificate& cert) {
  Json j;
  j["beta"] = affine_root_str(rs, cert.beta);
  j["complete"] = cert.complete();
  Json wit = Json::object();
  for (const auto& [alpha, word] : cert.witnesses) wit[affine_root_str(rs, alpha)] = word;
  j["witnesses"] = wit;
  Json un = Json::array();
  for (const AffineRoot& alpha : cert.unwitnessed) un.push_back(affine_root_str(rs, alpha));
  j["unwitnessed"] = un;
  return j;
}

/// CLI antichain syntax: comma-separated roots, each "e23"-style, a
/// "[c1,c2,...]" coordinate list, or a colon form "c1:c2:...".  The empty
/// string is the empty antichain.
inline Antichain parse_antichain_arg(const RootSystem& rs, const std::string& arg) {
  RootSet s;
  std::size_t pos = 0;
  while (pos < arg.size()) {
    std::size_t next = pos;
    int depth = 0;
    for (; next < arg.size(); ++next) {
      if (arg[next] == '[') ++depth;
      if (arg[next] == ']') --depth;
      if (arg[next] == ',' && depth == 0) break;
    }
    std::string tok = arg.substr(pos, next - pos);
    if (!tok.empty()) {
      std::string name = tok;
      if (tok.find(':') != std::string::npos) {
        name = "[";
        for (char c : tok) name += c == ':' ? ',' : c;
        name += "]";
      }
      FiniteRoot f = rs.parse_root(name);
      if (f.negative)
        throw FormatError("antichain roots must be positive: '" + tok + "'");
      s.set(f.index);
    }
    pos = next + 1;
  }
  return make_antichain(rs, s);
}

}  // namespace shilab
