/**
 * Command-line front end: materialize the antichain / ideal / sign-type /
 * minimal-element dictionary for a chosen affine Weyl group, run the
 * cross-verification suite, and draw the rank-2 wall arrangements.
 *
 * Exit codes: 0 on success, 1 on usage or construction errors, 2 when a
 * verification run finds a defect.
 */
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shilab/shilab.hpp"

namespace {

using namespace shilab;

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "-";
  bool wide = false;
  for (int s : word) wide = wide || s > 9;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && wide) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string names_str(const RootSystem& rs, RootSet s) {
  if (s.empty()) return "-";
  std::string out;
  for (int r = s.next(0); r >= 0; r = s.next(r + 1)) {
    if (!out.empty()) out += ' ';
    out += rs.root_name(r);
  }
  return out;
}

std::string affine_names_str(const RootSystem& rs, const std::vector<AffineRoot>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (const AffineRoot& r : v) {
    if (!out.empty()) out += ' ';
    out += affine_root_str(rs, r);
  }
  return out;
}

std::string coords_str(const std::vector<int>& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c[i]);
  }
  return out + "]";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_roots(const std::string& type, const std::string& format) {
  RootSystem rs(CartanType::parse(type));
  if (format == "json") {
    Json j;
    j["type"] = rs.cartan().to_string();
    j["rank"] = rs.rank();
    j["coxeter_number"] = rs.coxeter_number();
    j["weyl_order"] = rs.weyl_order();
    j["exponents"] = rs.exponents();
    Json roots = Json::array();
    for (int r = 0; r < rs.num_positive(); ++r) {
      Json e;
      e["name"] = rs.root_name(r);
      e["height"] = rs.height(r);
      e["coords"] = rs.root(r).simple;
      e["coroot"] = rs.coroot_coords(r);
      roots.push_back(e);
    }
    j["positive_roots"] = roots;
    emit(j);
    return 0;
  }
  std::cout << rs.cartan().to_string() << ": " << rs.num_positive()
            << " positive roots, rank " << rs.rank() << ", h = " << rs.coxeter_number()
            << ", |W| = " << rs.weyl_order() << ", exponents";
  for (int e : rs.exponents()) std::cout << " " << e;
  std::cout << "\n";
  std::size_t width = 0;
  for (int r = 0; r < rs.num_positive(); ++r)
    width = std::max(width, rs.root_name(r).size());
  for (int r = 0; r < rs.num_positive(); ++r)
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << rs.root_name(r)
              << "height " << rs.height(r) << "  " << coords_str(rs.root(r).simple)
              << "  coroot " << coords_str(rs.coroot_coords(r)) << "\n";
  return 0;
}

int cmd_ideals(const std::string& type, const std::string& format) {
  RootSystem rs(CartanType::parse(type));
  std::vector<Antichain> antichains = enumerate_antichains(rs);
  if (format == "json") {
    Json j;
    j["type"] = rs.cartan().to_string();
    j["count"] = antichains.size();
    Json list = Json::array();
    for (const Antichain& a : antichains) {
      RootIdeal ideal = up_closure(rs, a);
      Json e;
      e["antichain"] = antichain_json(rs, a);
      e["ideal"] = ideal_json(rs, ideal);
      e["sign_type"] = sign_str(sign_type_of_ideal(rs, ideal));
      list.push_back(e);
    }
    j["ideals"] = list;
    emit(j);
    return 0;
  }
  std::cout << rs.cartan().to_string() << ": " << antichains.size()
            << " antichains / up-closed sets\n";
  for (std::size_t i = 0; i < antichains.size(); ++i) {
    RootIdeal ideal = up_closure(rs, antichains[i]);
    std::cout << std::setw(4) << i + 1 << "  size " << std::setw(3) << ideal.roots.count()
              << "  sign " << sign_str(sign_type_of_ideal(rs, ideal)) << "  antichain "
              << names_str(rs, antichains[i].roots) << "\n";
  }
  return 0;
}

int cmd_regions(const std::string& type, const std::string& format) {
  RootSystem rs(CartanType::parse(type));
  std::vector<Antichain> antichains = enumerate_antichains(rs);
  if (format == "json") {
    Json j;
    j["type"] = rs.cartan().to_string();
    j["count"] = antichains.size();
    Json list = Json::array();
    for (const Antichain& a : antichains)
      list.push_back(region_json(rs, region_from_antichain(rs, a)));
    j["regions"] = list;
    emit(j);
    return 0;
  }
  std::cout << rs.cartan().to_string() << ": " << antichains.size()
            << " dominant regions\n";
  for (const Antichain& a : antichains) {
    DominantRegion region = region_from_antichain(rs, a);
    std::cout << "sign " << sign_str(region.sign_type) << "  length " << std::setw(3)
              << length(region.minimal_element) << "  word "
              << word_str(reduced_word(region.minimal_element)) << "  antichain "
              << names_str(rs, a.roots) << "  descents "
              << affine_names_str(rs, region.descent_roots()) << "\n";
  }
  return 0;
}

int cmd_minimal(const std::string& type, const std::string& antichain_arg,
                const std::string& format) {
  RootSystem rs(CartanType::parse(type));
  Antichain a = parse_antichain_arg(rs, antichain_arg);
  DominantRegion region = region_from_antichain(rs, a);
  if (format == "json") {
    emit(region_json(rs, region));
    return 0;
  }
  const AffineElement& w = region.minimal_element;
  std::cout << rs.cartan().to_string() << " antichain " << names_str(rs, a.roots) << "\n";
  std::cout << "ideal (" << region.ideal.roots.count()
            << "): " << names_str(rs, region.ideal.roots) << "\n";
  std::cout << "sign type " << sign_str(region.sign_type) << "\n"
            << sign_triangle(rs, region.sign_type) << "\n";
  KVector k = shi_coefficients(w);
  std::cout << "k-vector";
  for (long long v : k) std::cout << " " << v;
  std::cout << "\n" << k_triangle(rs, k) << "\n";
  std::cout << "minimal element word " << word_str(reduced_word(w)) << " (length "
            << length(w) << ")\n";
  std::cout << "descent roots " << affine_names_str(rs, region.descent_roots()) << "\n";
  std::cout << "dominant " << (is_dominant(w) ? "yes" : "no") << ", low "
            << (is_low(w) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_count(const std::string& type, const std::string& format) {
  RootSystem rs(CartanType::parse(type));
  long long enumerated = static_cast<long long>(enumerate_antichains(rs).size());
  long long catalan = catalan_product(rs);
  long long cp = cellini_papi_count(rs);
  bool has_mu = rs.cartan().family == Family::A || rs.cartan().family == Family::B ||
                rs.cartan().family == Family::C || rs.cartan().family == Family::D;
  long long mu = has_mu ? mu_formula(rs.cartan()) : 0;
  long long quotient = 1;
  bool has_orbits = true;
  for (int i = 0; i < rs.rank() && has_orbits; ++i) {
    quotient *= rs.coxeter_number() + 1;
    if (quotient > 5000000) has_orbits = false;
  }
  long long orbits = has_orbits ? orbit_count(rs, LatticeKind::Coroot) : 0;

  bool agree = enumerated == catalan && enumerated == cp &&
               (!has_mu || enumerated == mu) && (!has_orbits || enumerated == orbits);
  if (format == "json") {
    Json j;
    j["type"] = rs.cartan().to_string();
    j["enumeration"] = enumerated;
    j["catalan_product"] = catalan;
    j["product_over_weyl_order"] = cp;
    j["binomial_formula"] = has_mu ? Json(mu) : Json(nullptr);
    j["coroot_orbits"] = has_orbits ? Json(orbits) : Json(nullptr);
    j["agree"] = agree;
    emit(j);
  } else {
    std::cout << rs.cartan().to_string() << " counting:\n";
    std::cout << "  enumeration          " << enumerated << "\n";
    std::cout << "  catalan product      " << catalan << "\n";
    std::cout << "  product / |W|        " << cp << "\n";
    std::cout << "  binomial formula     " << (has_mu ? std::to_string(mu) : "n/a") << "\n";
    std::cout << "  coroot orbits        "
              << (has_orbits ? std::to_string(orbits) : "n/a (quotient too large)") << "\n";
    std::cout << "agree: " << (agree ? "yes" : "NO") << "\n";
  }
  return agree ? 0 : 2;
}

int cmd_orbits(const std::string& type, const std::string& format) {
  RootSystem rs(CartanType::parse(type));
  long long root = orbit_count(rs, LatticeKind::Root);
  long long coroot = orbit_count(rs, LatticeKind::Coroot);
  long long ideals = static_cast<long long>(enumerate_antichains(rs).size());
  bool match = root == coroot && coroot == ideals;
  if (format == "json") {
    Json j;
    j["type"] = rs.cartan().to_string();
    j["modulus"] = rs.coxeter_number() + 1;
    j["root_orbits"] = root;
    j["coroot_orbits"] = coroot;
    j["antichains"] = ideals;
    j["match"] = match;
    emit(j);
  } else {
    std::cout << rs.cartan().to_string() << " orbits modulo " << rs.coxeter_number() + 1
              << ":\n";
    std::cout << "  root lattice    " << root << "\n";
    std::cout << "  coroot lattice  " << coroot << "\n";
    std::cout << "  antichains      " << ideals << "\n";
    std::cout << "match: " << (match ? "yes" : "NO") << "\n";
  }
  return match ? 0 : 2;
}

int cmd_verify(const std::string& type, long long max_length, bool timings,
               const std::string& format) {
  RootSystem rs(CartanType::parse(type));
  VerifyReport rep = run_verify(rs, max_length);
  if (format == "json") {
    Json j;
    j["type"] = rep.type;
    j["max_length"] = rep.max_length;
    j["bound"] = rep.bound;
    j["complete"] = rep.complete;
    Json checks = Json::array();
    for (const CheckResult& c : rep.checks) {
      Json e;
      e["name"] = c.name;
      e["pass"] = c.pass;
      e["detail"] = c.detail;
      if (timings) e["millis"] = c.millis;
      checks.push_back(e);
    }
    j["checks"] = checks;
    j["all_pass"] = rep.all_pass();
    emit(j);
  } else {
    std::cout << rep.type << ": radius " << rep.max_length << " (bound " << rep.bound
              << ", " << (rep.complete ? "complete" : "partial") << ")\n";
    for (const CheckResult& c : rep.checks) {
      std::cout << (c.pass ? "ok    " : "FAIL  ") << c.name << ": " << c.detail;
      if (timings)
        std::cout << " [" << std::fixed << std::setprecision(1) << c.millis << "ms]";
      std::cout << "\n";
    }
    std::cout << (rep.all_pass() ? "all checks passed" : "verification FAILED") << "\n";
  }
  return rep.all_pass() ? 0 : 2;
}

int cmd_plot(const std::string& type, const std::string& out) {
  RootSystem rs(CartanType::parse(type));
  std::string svg = shi_plot_svg(rs);
  if (out.empty()) {
    std::cout << svg;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error("cannot open '" + out + "' for writing");
  f << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine Weyl group regions: antichains, ideals, sign types, "
               "minimal alcove elements"};
  app.require_subcommand(1);

  std::string type, format = "text", antichain_arg, out;
  long long max_length = -1;
  bool timings = false;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* roots = app.add_subcommand("roots", "positive roots of a finite type");
  roots->add_option("type", type, "Cartan type, e.g. A3 or G2")->required();
  add_format(roots);

  CLI::App* ideals = app.add_subcommand("ideals", "all antichains and up-closed sets");
  ideals->add_option("type", type)->required();
  add_format(ideals);

  CLI::App* regions = app.add_subcommand("regions", "all dominant regions, one per line");
  regions->add_option("type", type)->required();
  add_format(regions);

  CLI::App* minimal =
      app.add_subcommand("minimal", "one region in detail, from its antichain");
  minimal->add_option("type", type)->required();
  minimal->add_option("--antichain", antichain_arg,
                      "comma-separated roots, e.g. e23 or [1,0,0]; empty for the "
                      "fundamental alcove region");
  add_format(minimal);

  CLI::App* count = app.add_subcommand("count", "counting formulas side by side");
  count->add_option("type", type)->required();
  add_format(count);

  CLI::App* orbits = app.add_subcommand("orbits", "orbit counts on both torsion quotients");
  orbits->add_option("type", type)->required();
  add_format(orbits);

  CLI::App* verify = app.add_subcommand("verify", "run the cross-verification suite");
  verify->add_option("type", type)->required();
  verify->add_option("--max-length", max_length,
                     "ball radius for the search oracles (default: past the "
                     "sufficiency bound when feasible)");
  verify->add_flag("--timings", timings, "append per-check wall times");
  add_format(verify);

  CLI::App* plot = app.add_subcommand("plot", "SVG wall arrangement (rank 2 only)");
  plot->add_option("type", type)->required();
  plot->add_option("--out", out, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (roots->parsed()) return cmd_roots(type, format);
    if (ideals->parsed()) return cmd_ideals(type, format);
    if (regions->parsed()) return cmd_regions(type, format);
    if (minimal->parsed()) return cmd_minimal(type, antichain_arg, format);
    if (count->parsed()) return cmd_count(type, format);
    if (orbits->parsed()) return cmd_orbits(type, format);
    if (verify->parsed()) return cmd_verify(type, max_length, timings, format);
    if (plot->parsed()) return cmd_plot(type, out);
  } catch (const shilab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
