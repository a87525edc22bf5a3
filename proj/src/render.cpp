#include "balines/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace balines {

namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 40.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

const char* fill(Color c) { return c == Color::Blue ? "#1f5fbf" : "#c8322d"; }

}  // namespace

std::string render_svg(const Instance& inst, const WitnessSet& lines) {
  double min_x = inst.point(0).x.get_d();
  double max_x = min_x;
  double min_y = inst.point(0).y.get_d();
  double max_y = min_y;
  for (const auto& p : inst.points()) {
    min_x = std::min(min_x, p.x.get_d());
    max_x = std::max(max_x, p.x.get_d());
    min_y = std::min(min_y, p.y.get_d());
    max_y = std::max(max_y, p.y.get_d());
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (kSize - 2 * kMargin) / span;
  auto sx = [&](double x) { return kMargin + (x - min_x) * scale; };
  auto sy = [&](double y) { return kSize - kMargin - (y - min_y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize + 30
      << "\" viewBox=\"0 0 " << kSize << ' ' << kSize + 30 << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<clipPath id=\"view\"><rect width=\"" << kSize << "\" height=\"" << kSize << "\"/></clipPath>\n";
  svg << "<g clip-path=\"url(#view)\" stroke=\"#555\" stroke-width=\"1\">\n";
  for (const auto& [key, w] : lines) {
    const auto& a = inst.point(key.first);
    const auto& b = inst.point(key.second);
    const double ax = sx(a.x.get_d());
    const double ay = sy(a.y.get_d());
    const double dx = sx(b.x.get_d()) - ax;
    const double dy = sy(b.y.get_d()) - ay;
    const double len = std::max(std::hypot(dx, dy), 1e-9);
    const double reach = 2 * kSize / len;
    svg << "<line x1=\"" << fmt(ax - reach * dx) << "\" y1=\"" << fmt(ay - reach * dy) << "\" x2=\""
        << fmt(ax + reach * dx) << "\" y2=\"" << fmt(ay + reach * dy) << "\"/>\n";
  }
  svg << "</g>\n";
  for (const auto& p : inst.points()) {
    svg << "<circle cx=\"" << fmt(sx(p.x.get_d())) << "\" cy=\"" << fmt(sy(p.y.get_d()))
        << "\" r=\"4\" fill=\"" << fill(p.color) << "\"><title>" << p.id << "</title></circle>\n";
  }
  svg << "<text x=\"10\" y=\"" << kSize + 20 << "\" font-family=\"monospace\" font-size=\"14\">b = "
      << inst.blue_count() << ", r = " << inst.red_count() << ", delta = " << inst.delta()
      << ", balanced lines = " << lines.size() << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace balines
