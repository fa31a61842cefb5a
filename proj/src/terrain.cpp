#include "terrainguard/terrain.hpp"

#include <algorithm>

#include "terrainguard/errors.hpp"

namespace terrainguard {

int orientation(const TerrainPoint& a, const TerrainPoint& b, const TerrainPoint& c) {
  const Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.sign();
}

Terrain Terrain::make(const std::vector<std::pair<Rational, Rational>>& raw_vertices) {
  if (raw_vertices.size() < 2)
    throw ValidationError("terrain needs at least 2 vertices, got " +
                          std::to_string(raw_vertices.size()));
  for (std::size_t i = 1; i < raw_vertices.size(); ++i) {
    if (!(raw_vertices[i - 1].first < raw_vertices[i].first))
      throw ValidationError("terrain x coordinates must be strictly increasing (vertex " +
                            std::to_string(i) + " at x=" + raw_vertices[i].first.str() + ")");
  }

  Terrain t;
  t.verts_.reserve(raw_vertices.size());
  for (const auto& [x, y] : raw_vertices) {
    TerrainPoint v{x, y};
    // drop the middle vertex of any collinear run
    while (t.verts_.size() >= 2 &&
           orientation(t.verts_[t.verts_.size() - 2], t.verts_.back(), v) == 0) {
      t.verts_.pop_back();
    }
    t.verts_.push_back(std::move(v));
  }
  return t;
}

TerrainPoint Terrain::point_at(const Rational& x) const {
  if (!contains_x(x))
    throw ValidationError("x=" + x.str() + " outside terrain range [" + x_min().str() + ", " +
                          x_max().str() + "]");
  auto it = std::lower_bound(verts_.begin(), verts_.end(), x,
                             [](const TerrainPoint& v, const Rational& key) { return v.x < key; });
  if (it->x == x) return *it;
  const TerrainPoint& b = *it;
  const TerrainPoint& a = *(it - 1);
  Rational y = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
  return TerrainPoint{x, std::move(y)};
}

bool Terrain::sees(const TerrainPoint& p, const TerrainPoint& q) const {
  if (p.x == q.x) return true;  // a chain point always sees itself
  const TerrainPoint& lo = p.x < q.x ? p : q;
  const TerrainPoint& hi = p.x < q.x ? q : p;
  auto first = std::lower_bound(verts_.begin(), verts_.end(), lo.x,
                                [](const TerrainPoint& v, const Rational& key) { return v.x < key; });
  for (auto it = first; it != verts_.end() && it->x <= hi.x; ++it) {
    if (orientation(lo, hi, *it) > 0) return false;  // vertex strictly above the segment
  }
  return true;
}

}  // namespace terrainguard
