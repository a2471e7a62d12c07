#include <cmath>
#include <cstdio>

#include "conglab/sim.hpp"

namespace conglab {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

// screen x, screen y, depth toward the viewer
std::array<double, 3> project(const Approx& a, ViewAxis axis) {
  switch (axis) {
    case ViewAxis::X:
      return {a[1], -a[2], a[0]};
    case ViewAxis::Y:
      return {-a[0], -a[2], a[1]};
    case ViewAxis::Z:
      break;
  }
  return {a[0], -a[1], a[2]};
}

}  // namespace

std::string render_svg(const StageState& st, ViewAxis axis) {
  const char* name = axis == ViewAxis::X ? "x" : axis == ViewAxis::Y ? "y" : "z";
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"-1.05 -1.05 2.1 2.1\">\n";
  out += "<title>stage " + std::to_string(st.stage) + ", view along +" + name + "</title>\n";
  out += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"white\" stroke=\"black\" stroke-width=\"0.004\"/>\n";
  for (std::size_t k = 0; k < st.pieces.size(); ++k) {
    if (st.pieces[k].empty()) continue;
    out += "<g class=\"piece-" + std::to_string(k + 1) + "\" fill=\"" + kPalette[k % std::size(kPalette)] + "\">\n";
    for (const Patch& patch : st.pieces[k]) {
      const auto x0 = st.graph.find(patch.base_center);
      if (!x0) continue;
      const auto id = st.graph.walk(*x0, patch.word, st.realization);
      const auto s = project(st.graph.approx(id), axis);
      const double r = std::sqrt(patch.radius_sq.get_d());
      out += "<circle cx=\"" + num(s[0]) + "\" cy=\"" + num(s[1]) + "\" r=\"" + num(r) + "\" fill-opacity=\"" +
             (s[2] >= 0 ? "0.6" : "0.15") + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace conglab
