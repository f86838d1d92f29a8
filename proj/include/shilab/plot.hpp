#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "shilab/shi.hpp"

namespace shilab {

namespace plot_detail {

struct P2 {
  double x = 0, y = 0;
};

inline std::string fmt(double v) {
  char buf[32];
  // Fixed precision keeps repeat renders byte-identical.
  std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // normalize -0
  return buf;
}

/// Exact affine action of a word on an ambient point:
/// s_i(x) = x - <x, alpha_i^vee> alpha_i, and the affine letter reflects in
/// the wall <x, theta> = 1.
inline Vec apply_word(const RootSystem& rs, const std::vector<int>& word, Vec x) {
  for (std::size_t i = word.size(); i-- > 0;) {
    int s = word[i];
    if (s == 0) {
      int th = rs.highest_root_index();
      Rat c = dot(x, rs.coroot_ambient(th));
      x = sub(x, scaled(c, rs.root(th).ambient));
      x = add(x, rs.coroot_ambient(th));
    } else {
      Rat c = dot(x, rs.coroot_ambient(s - 1));
      x = sub(x, scaled(c, rs.root(s - 1).ambient));
    }
  }
  return x;
}

}  // namespace plot_detail

/**
 * SVG picture of the rank-2 Shi arrangement: the hyperplanes <x, alpha> in
 * {0, 1} for all positive roots, the shaded dominant chamber, and one
 * labeled minimal alcove per dominant region (label = sign type).
 */
inline std::string shi_plot_svg(const RootSystem& rs) {
  using plot_detail::P2;
  using plot_detail::fmt;
  if (rs.rank() != 2)
    throw Error("plotting is implemented for rank 2 only, not " + rs.cartan().to_string());

  // Orthonormal basis of the root plane, for projection only (doubles).
  const int dim = rs.ambient_dim();
  std::vector<double> a1(dim), a2(dim);
  for (int k = 0; k < dim; ++k) {
    a1[k] = static_cast<double>(rs.root(0).ambient[k]);
    a2[k] = static_cast<double>(rs.root(1).ambient[k]);
  }
  auto dotd = [&](const std::vector<double>& u, const std::vector<double>& v) {
    double s = 0;
    for (int k = 0; k < dim; ++k) s += u[k] * v[k];
    return s;
  };
  double n1 = std::sqrt(dotd(a1, a1));
  std::vector<double> u1(dim), u2(dim);
  for (int k = 0; k < dim; ++k) u1[k] = a1[k] / n1;
  double p = dotd(a2, u1);
  for (int k = 0; k < dim; ++k) u2[k] = a2[k] - p * u1[k];
  double n2 = std::sqrt(dotd(u2, u2));
  for (int k = 0; k < dim; ++k) u2[k] /= n2;
  auto project = [&](const Vec& v) {
    std::vector<double> vd(dim);
    for (int k = 0; k < dim; ++k) vd[k] = static_cast<double>(v[k]);
    return P2{dotd(vd, u1), -dotd(vd, u2)};  // SVG y grows downward
  };

  // Fundamental alcove vertices: 0 and the scaled fundamental coweights
  // (exact 2x2 solve against the Gram matrix of the simple roots).
  Rat g11 = rs.inner(0, 0), g12 = rs.inner(0, 1), g22 = rs.inner(1, 1);
  Rat det = g11 * g22 - g12 * g12;
  auto coweight = [&](int i) {
    Rat a = i == 0 ? Rat(g22 / det) : Rat(-g12 / det);
    Rat b = i == 0 ? Rat(-g12 / det) : Rat(g11 / det);
    return add(scaled(a, rs.root(0).ambient), scaled(b, rs.root(1).ambient));
  };
  const std::vector<int>& theta = rs.highest_root().simple;
  Vec zero(static_cast<std::size_t>(dim), Rat(0));
  std::vector<Vec> alcove = {zero, scaled(Rat(1, theta[0]), coweight(0)),
                             scaled(Rat(1, theta[1]), coweight(1))};

  // Minimal alcoves of all dominant regions.
  std::vector<DominantRegion> regions;
  for (const Antichain& a : enumerate_antichains(rs))
    regions.push_back(region_from_antichain(rs, a));

  std::vector<std::vector<P2>> polys;
  std::vector<P2> labels;
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const DominantRegion& r : regions) {
    std::vector<int> word = reduced_word(r.minimal_element);
    std::vector<P2> poly;
    P2 centroid;
    for (const Vec& v : alcove) {
      P2 q = project(plot_detail::apply_word(rs, word, v));
      centroid.x += q.x / 3;
      centroid.y += q.y / 3;
      lo_x = std::min(lo_x, q.x);
      hi_x = std::max(hi_x, q.x);
      lo_y = std::min(lo_y, q.y);
      hi_y = std::max(hi_y, q.y);
      poly.push_back(q);
    }
    polys.push_back(poly);
    labels.push_back(centroid);
  }
  double pad = 0.6;
  lo_x -= pad;
  lo_y -= pad;
  hi_x += pad;
  hi_y += pad;

  std::string svg;
  auto line_to_box = [&](double nx, double ny, double c, std::string cls) {
    // {q : q.n = c} clipped to the bounding box.
    std::vector<P2> pts;
    auto consider = [&](double x, double y) {
      if (x >= lo_x - 1e-9 && x <= hi_x + 1e-9 && y >= lo_y - 1e-9 && y <= hi_y + 1e-9)
        pts.push_back(P2{x, y});
    };
    if (std::fabs(ny) > 1e-12) {
      consider(lo_x, (c - nx * lo_x) / ny);
      consider(hi_x, (c - nx * hi_x) / ny);
    }
    if (std::fabs(nx) > 1e-12) {
      consider((c - ny * lo_y) / nx, lo_y);
      consider((c - ny * hi_y) / nx, hi_y);
    }
    if (pts.size() < 2) return;
    P2 a = pts[0], b = pts[0];
    double best = 0;
    for (const P2& s : pts)
      for (const P2& t : pts) {
        double d = (s.x - t.x) * (s.x - t.x) + (s.y - t.y) * (s.y - t.y);
        if (d > best) {
          best = d;
          a = s;
          b = t;
        }
      }
    if (best < 1e-12) return;
    svg += "  <line class=\"" + cls + "\" x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) +
           "\" x2=\"" + fmt(b.x) + "\" y2=\"" + fmt(b.y) + "\"/>\n";
  };

  double width = hi_x - lo_x, height = hi_y - lo_y;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(lo_x) + " " + fmt(lo_y) +
         " " + fmt(width) + " " + fmt(height) + "\" width=\"640\" height=\"" +
         fmt(640 * height / width) + "\">\n";
  svg +=
      "  <style>\n"
      "    .wall0 { stroke: #555; stroke-width: 0.015; }\n"
      "    .wall1 { stroke: #b04030; stroke-width: 0.015; }\n"
      "    .chamber { fill: #f2e8c8; }\n"
      "    .alcove { fill: #9ec7e0; fill-opacity: 0.75; stroke: #1f4e6e; stroke-width: 0.01; }\n"
      "    .region-label { font: 0.11px monospace; fill: #111; text-anchor: middle; }\n"
      "    .title { font: 0.16px sans-serif; fill: #111; }\n"
      "  </style>\n";
  svg += "  <rect x=\"" + fmt(lo_x) + "\" y=\"" + fmt(lo_y) + "\" width=\"" + fmt(width) +
         "\" height=\"" + fmt(height) + "\" fill=\"#ffffff\"/>\n";

  // Dominant chamber wedge (rays along the fundamental coweights).
  {
    P2 r1 = project(coweight(0)), r2 = project(coweight(1));
    double s1 = 20 / std::hypot(r1.x, r1.y), s2 = 20 / std::hypot(r2.x, r2.y);
    P2 mid{(r1.x * s1 + r2.x * s2) / 2, (r1.y * s1 + r2.y * s2) / 2};
    svg += "  <polygon class=\"chamber\" points=\"0,0 " + fmt(r1.x * s1) + "," + fmt(r1.y * s1) +
           " " + fmt(mid.x) + "," + fmt(mid.y) + " " + fmt(r2.x * s2) + "," + fmt(r2.y * s2) +
           "\"/>\n";
  }

  for (const std::vector<P2>& poly : polys) {
    svg += "  <polygon class=\"alcove\" points=\"";
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (i) svg += " ";
      svg += fmt(poly[i].x) + "," + fmt(poly[i].y);
    }
    svg += "\"/>\n";
  }

  for (int r = 0; r < rs.num_positive(); ++r) {
    std::vector<double> alpha(dim);
    for (int k = 0; k < dim; ++k) alpha[k] = static_cast<double>(rs.root(r).ambient[k]);
    double nx = dotd(alpha, u1), ny = -dotd(alpha, u2);
    line_to_box(nx, ny, 0, "wall0");
    line_to_box(nx, ny, 1, "wall1");
  }

  for (std::size_t i = 0; i < regions.size(); ++i) {
    svg += "  <text class=\"region-label\" x=\"" + fmt(labels[i].x) + "\" y=\"" +
           fmt(labels[i].y + 0.03) + "\">" + sign_str(regions[i].sign_type) + "</text>\n";
  }
  svg += "  <text class=\"title\" x=\"" + fmt(lo_x + 0.1) + "\" y=\"" + fmt(lo_y + 0.25) + "\">" +
         rs.cartan().to_string() + ": " + std::to_string(regions.size()) +
         " dominant Shi regions</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace shilab
