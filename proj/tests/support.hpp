#pragma once

// Test-side helpers kept independent of the library code paths they check.

#include <vector>

#include "terrainguard/instance_io.hpp"
#include "terrainguard/solvers.hpp"
#include "terrainguard/terrain.hpp"

namespace tgtest {

using namespace terrainguard;

// Independent visibility oracle: compares chain height against segment height
// (both by exact interpolation, no orientation tests) at every vertex between
// p and q plus a uniform grid. The chain-minus-segment difference is piecewise
// linear with breakpoints only at vertices, so sampling the vertices decides
// visibility exactly; the grid is extra coverage.
inline bool sees_by_sampling(const Terrain& t, const TerrainPoint& p, const TerrainPoint& q) {
  if (p.x == q.x) return true;
  const TerrainPoint& lo = p.x < q.x ? p : q;
  const TerrainPoint& hi = p.x < q.x ? q : p;
  const Rational run = hi.x - lo.x;
  auto segment_y = [&](const Rational& x) { return lo.y + (hi.y - lo.y) * (x - lo.x) / run; };

  std::vector<Rational> samples;
  for (const auto& v : t.vertices())
    if (v.x >= lo.x && v.x <= hi.x) samples.push_back(v.x);
  for (long k = 1; k < 17; ++k) samples.push_back(lo.x + run * Rational(k, 17));

  for (const auto& x : samples)
    if (t.point_at(x).y > segment_y(x)) return false;
  return true;
}

inline Terrain mirrored(const Terrain& t) {
  std::vector<std::pair<Rational, Rational>> verts;
  const auto& vs = t.vertices();
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) verts.emplace_back(-it->x, it->y);
  return Terrain::make(verts);
}

inline std::vector<TerrainPoint> mirrored_points(const Terrain& mt,
                                                 const std::vector<TerrainPoint>& pts) {
  std::vector<TerrainPoint> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(mt.point_at(-p.x));
  return out;
}

inline Terrain w_terrain() {
  return Terrain::make({{0, 4}, {2, 0}, {4, 2}, {6, 0}, {8, 4}});
}

inline Terrain flat_terrain(long hi = 10) {
  return Terrain::make({{0, 0}, {Rational(hi), 0}});
}

inline std::vector<TerrainPoint> at_xs(const Terrain& t, const std::vector<Rational>& xs) {
  std::vector<TerrainPoint> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(t.point_at(x));
  return out;
}

}  // namespace tgtest
