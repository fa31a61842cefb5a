#include "terrainguard/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace terrainguard {

namespace {

const char* kLeftColor = "#1f77b4";
const char* kRightColor = "#d62728";
const char* kBothColor = "#2ca02c";

const char* side_color(Side s) {
  switch (s) {
    case Side::Left: return kLeftColor;
    case Side::Right: return kRightColor;
    case Side::Both: return kBothColor;
  }
  return "#000000";
}

struct Mapper {
  double x0, y0, sx, sy, height;
  double x(const Rational& v) const { return (v.to_double() - x0) * sx + 40.0; }
  double y(const Rational& v) const { return height - 40.0 - (v.to_double() - y0) * sy; }
};

void fmt(std::ostringstream& os) { os.setf(std::ios::fixed); os.precision(2); }

}  // namespace

std::string render_svg(const GuardingInstance& instance, const Solution* solution) {
  const Terrain& t = instance.terrain;
  double min_x = t.x_min().to_double(), max_x = t.x_max().to_double();
  double min_y = t.vertices().front().y.to_double(), max_y = min_y;
  for (const auto& v : t.vertices()) {
    min_y = std::min(min_y, v.y.to_double());
    max_y = std::max(max_y, v.y.to_double());
  }
  if (max_x - min_x < 1e-9) max_x = min_x + 1.0;
  if (max_y - min_y < 1e-9) max_y = min_y + 1.0;

  const double width = 800.0;
  const double height = std::max(240.0, std::min(600.0, 80.0 + (max_y - min_y) / (max_x - min_x) * 720.0));
  Mapper m{min_x, min_y, 720.0 / (max_x - min_x), (height - 80.0) / (max_y - min_y), height};

  std::ostringstream os;
  fmt(os);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // terrain
  os << "  <polyline fill=\"none\" stroke=\"#444444\" stroke-width=\"2\" points=\"";
  for (const auto& v : t.vertices()) os << m.x(v.x) << "," << m.y(v.y) << " ";
  os << "\"/>\n";
  for (const auto& v : t.vertices())
    os << "  <circle cx=\"" << m.x(v.x) << "\" cy=\"" << m.y(v.y)
       << "\" r=\"2.5\" fill=\"#444444\"><title>vertex x=" << v.x.str() << "</title></circle>\n";

  if (instance.mode == Mode::Continuous) {
    EssentialSegments segs = essential_segments(t);
    for (const auto& b : segs.breakpoints)
      os << "  <line x1=\"" << m.x(b.x) << "\" y1=\"" << m.y(b.y) - 6 << "\" x2=\"" << m.x(b.x)
         << "\" y2=\"" << m.y(b.y) + 6
         << "\" stroke=\"#999999\" stroke-width=\"1\"><title>breakpoint x=" << b.x.str()
         << "</title></line>\n";
    for (const auto& r : segs.representatives)
      os << "  <circle cx=\"" << m.x(r.x) << "\" cy=\"" << m.y(r.y)
         << "\" r=\"3\" fill=\"none\" stroke=\"#9467bd\" stroke-width=\"1.5\"><title>representative x="
         << r.x.str() << "</title></circle>\n";
  }

  for (const auto& p : instance.points)
    os << "  <circle cx=\"" << m.x(p.x) << "\" cy=\"" << m.y(p.y)
       << "\" r=\"3\" fill=\"#111111\"><title>point x=" << p.x.str() << "</title></circle>\n";

  std::set<std::pair<std::string, std::string>> picked;
  if (solution) {
    for (const auto& p : solution->picks) picked.insert({p.guard.x.str(), side_name(p.dir)});
  }

  auto draw_guard = [&](const TerrainPoint& g, Side side) {
    const bool hot = picked.count({g.x.str(), side_name(side)}) > 0;
    os << "  <circle cx=\"" << m.x(g.x) << "\" cy=\"" << m.y(g.y) << "\" r=\"" << (hot ? 6.0 : 4.0)
       << "\" fill=\"" << side_color(side) << "\" fill-opacity=\"" << (hot ? "0.95" : "0.45")
       << "\"";
    if (hot) os << " stroke=\"#000000\" stroke-width=\"1.5\"";
    os << "><title>" << side_name(side) << " guard x=" << g.x.str()
       << (hot ? " (picked)" : "") << "</title></circle>\n";
  };

  for (const auto& g : instance.left_guards) draw_guard(g, Side::Left);
  for (const auto& g : instance.right_guards) draw_guard(g, Side::Right);
  for (const auto& g : instance.both_guards) draw_guard(g, Side::Both);
  if (instance.mode == Mode::Continuous && solution)
    for (const auto& p : solution->picks) draw_guard(p.guard, p.dir);

  os << "</svg>\n";
  return os.str();
}

}  // namespace terrainguard
