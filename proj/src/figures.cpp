#include "bergtop/figures.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bergtop::figures {
namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 56.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

struct Mapper {
  double extent;
  double px(double x) const { return kMargin + x / extent * (kCanvas - 2 * kMargin); }
  double py(double y) const { return kCanvas - kMargin - y / extent * (kCanvas - 2 * kMargin); }
  std::string at(double x, double y) const { return fmt(px(x)) + ',' + fmt(py(y)); }
};

std::string svg_open() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
}

std::string text(double x, double y, const std::string& s, const std::string& extra = "") {
  return "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) +
         "\" font-family=\"sans-serif\" font-size=\"15\"" + extra + ">" + s + "</text>\n";
}

std::string axes(const Mapper& map, const std::string& xlabel, const std::string& ylabel) {
  std::string out;
  out += "<line x1=\"" + fmt(map.px(0)) + "\" y1=\"" + fmt(map.py(0)) + "\" x2=\"" +
         fmt(map.px(map.extent)) + "\" y2=\"" + fmt(map.py(0)) +
         "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  out += "<line x1=\"" + fmt(map.px(0)) + "\" y1=\"" + fmt(map.py(0)) + "\" x2=\"" +
         fmt(map.px(0)) + "\" y2=\"" + fmt(map.py(map.extent)) +
         "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  for (int k = 1; k <= static_cast<int>(map.extent); ++k) {
    out += "<line x1=\"" + fmt(map.px(k)) + "\" y1=\"" + fmt(map.py(0) - 4) + "\" x2=\"" +
           fmt(map.px(k)) + "\" y2=\"" + fmt(map.py(0) + 4) + "\" stroke=\"black\"/>\n";
    out += text(map.px(k) - 4, map.py(0) + 20, std::to_string(k));
    out += "<line x1=\"" + fmt(map.px(0) - 4) + "\" y1=\"" + fmt(map.py(k)) + "\" x2=\"" +
           fmt(map.px(0) + 4) + "\" y2=\"" + fmt(map.py(k)) + "\" stroke=\"black\"/>\n";
    out += text(map.px(0) - 24, map.py(k) + 5, std::to_string(k));
  }
  out += text(map.px(map.extent) - 20, map.py(0) + 38, xlabel);
  out += text(map.px(0) - 40, map.py(map.extent) - 10, ylabel);
  return out;
}

}  // namespace

std::string domain_svg(const DomainSpec& spec, double extent) {
  const double e = std::numbers::e;
  if (!(extent > e + 0.5)) {
    throw std::invalid_argument("domain_svg: extent must exceed e + 1/2");
  }
  const Mapper map{extent};
  const int samples = 240;
  std::string out = svg_open();

  // Z: the closed bidisc cross-section [0, e] x [0, 2].
  out += "<rect x=\"" + fmt(map.px(0)) + "\" y=\"" + fmt(map.py(2)) + "\" width=\"" +
         fmt(map.px(e) - map.px(0)) + "\" height=\"" + fmt(map.py(0) - map.py(2)) +
         "\" fill=\"#cfe3f7\" stroke=\"#33557f\" stroke-width=\"1\"/>\n";

  // X: below the curve r2 = 1/(r1 log r1), to the right of r1 = e.
  std::string xpath = "M" + map.at(e, 0) + " L" + map.at(e, 1.0 / e);
  for (int i = 1; i <= samples; ++i) {
    const double r1 = e + (extent - e) * i / samples;
    xpath += " L" + map.at(r1, 1.0 / (r1 * std::log(r1)));
  }
  xpath += " L" + map.at(extent, 0) + " Z";
  out += "<path d=\"" + xpath + "\" fill=\"#d3eed3\" stroke=\"#2f7032\" stroke-width=\"1\"/>\n";

  // Y: the slab |r1 - 1/r2| < r2^(-m) above r2 = 2, traced up the outer edge
  // and back down the inner edge.
  const int m = spec.m();
  std::string ypath;
  for (int i = 0; i <= samples; ++i) {
    const double r2 = 2.0 + (extent - 2.0) * i / samples;
    const double r1 = 1.0 / r2 + std::pow(r2, -m);
    ypath += (i == 0 ? "M" : " L") + map.at(r1, r2);
  }
  for (int i = samples; i >= 0; --i) {
    const double r2 = 2.0 + (extent - 2.0) * i / samples;
    const double r1 = std::max(0.0, 1.0 / r2 - std::pow(r2, -m));
    ypath += " L" + map.at(r1, r2);
  }
  ypath += " Z";
  out += "<path d=\"" + ypath + "\" fill=\"#f6d5cb\" stroke=\"#a04828\" stroke-width=\"1\"/>\n";

  out += axes(map, "|z1|", "|z2|");
  out += text(map.px(0.5 * e), map.py(1.0), "Z");
  out += text(map.px(0.5 * (e + extent)), map.py(0.0) - 12, "X");
  out += text(map.px(0.55), map.py(0.5 * (2.0 + extent)), "Y");
  out += text(kMargin, 30.0, "domain cross-section, m = " + std::to_string(m),
              " font-weight=\"bold\"");
  out += "</svg>\n";
  return out;
}

std::string lattice_svg(const DomainSpec& spec, int extent) {
  if (extent < 1) throw std::invalid_argument("lattice_svg: extent must be >= 1");
  const Mapper map{static_cast<double>(extent)};
  std::string out = svg_open();
  out +=
      "<defs><marker id=\"tip\" markerWidth=\"7\" markerHeight=\"7\" refX=\"5\" refY=\"2.5\" "
      "orient=\"auto\"><path d=\"M0,0 L5,2.5 L0,5 Z\" fill=\"context-stroke\"/></marker></defs>\n";
  out += axes(map, "a1", "a2");

  // Arrows first so points sit on top of them.
  for (int a1 = 0; a1 <= extent; ++a1) {
    for (int a2 = 0; a2 <= extent; ++a2) {
      const MultiIndex idx{a1, a2};
      if (!lattice::member(spec, idx)) continue;
      if (a1 + 2 > extent) continue;
      const bool stays = lattice::member(spec, MultiIndex{a1 + 2, a2});
      out += "<line x1=\"" + fmt(map.px(a1 + 0.15)) + "\" y1=\"" + fmt(map.py(a2)) + "\" x2=\"" +
             fmt(map.px(a1 + 1.8)) + "\" y2=\"" + fmt(map.py(a2)) + "\" stroke=\"" +
             (stays ? "#2f7032" : "#b03030") + "\" stroke-width=\"1.4\"" +
             (stays ? "" : " stroke-dasharray=\"4,3\"") + " marker-end=\"url(#tip)\"/>\n";
    }
  }
  for (int a1 = 0; a1 <= extent; ++a1) {
    for (int a2 = 0; a2 <= extent; ++a2) {
      const bool in = lattice::member(spec, MultiIndex{a1, a2});
      out += "<circle cx=\"" + fmt(map.px(a1)) + "\" cy=\"" + fmt(map.py(a2)) + "\" r=\"4\" " +
             (in ? "fill=\"#1f3d7a\"" : "fill=\"white\" stroke=\"#9a9a9a\"") + "/>\n";
    }
  }
  out += text(kMargin, 30.0,
              "admissible exponents and the two-step advance, m = " + std::to_string(spec.m()),
              " font-weight=\"bold\"");
  out += "</svg>\n";
  return out;
}

}  // namespace bergtop::figures
