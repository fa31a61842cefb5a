#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "terrainguard/rational.hpp"

namespace terrainguard {

// A point on a terrain chain. y is the chain height at x, cached at
// construction; points on the same chain are totally ordered by x because the
// chain meets every vertical line at most once.
struct TerrainPoint {
  Rational x;
  Rational y;
};

inline bool operator==(const TerrainPoint& a, const TerrainPoint& b) { return a.x == b.x; }
inline bool operator!=(const TerrainPoint& a, const TerrainPoint& b) { return a.x != b.x; }
inline bool operator<(const TerrainPoint& a, const TerrainPoint& b) { return a.x < b.x; }
inline bool operator<=(const TerrainPoint& a, const TerrainPoint& b) { return a.x <= b.x; }
inline bool operator>(const TerrainPoint& a, const TerrainPoint& b) { return a.x > b.x; }
inline bool operator>=(const TerrainPoint& a, const TerrainPoint& b) { return a.x >= b.x; }

// Sign of the cross product (b - a) x (c - a): +1 if c is strictly left of the
// directed line a->b, -1 strictly right, 0 on the line. Exact.
int orientation(const TerrainPoint& a, const TerrainPoint& b, const TerrainPoint& c);

// An x-monotone polygonal chain with exact rational vertices. Vertices have
// strictly increasing x; runs of three collinear vertices are normalized away
// at construction so the vertex set is canonical. Immutable after make().
class Terrain {
 public:
  // Empty placeholder; every usable terrain comes from make().
  Terrain() = default;

  // Validates and normalizes. Throws ValidationError on fewer than two
  // surviving vertices or on non-increasing x.
  static Terrain make(const std::vector<std::pair<Rational, Rational>>& raw_vertices);

  const std::vector<TerrainPoint>& vertices() const { return verts_; }
  std::size_t vertex_count() const { return verts_.size(); }
  const Rational& x_min() const { return verts_.front().x; }
  const Rational& x_max() const { return verts_.back().x; }
  bool contains_x(const Rational& x) const { return x >= x_min() && x <= x_max(); }

  // Lifts an abscissa onto the chain with exact interpolated height.
  // Throws ValidationError if x is outside [x_min, x_max].
  TerrainPoint point_at(const Rational& x) const;

  // True iff the segment pq never goes strictly below the chain. Decided by
  // checking every vertex between p and q against the segment with exact
  // orientation tests: on a piecewise-linear chain the maximum of
  // chain - segment is attained at a vertex. Reflexive and symmetric.
  bool sees(const TerrainPoint& p, const TerrainPoint& q) const;

 private:
  std::vector<TerrainPoint> verts_;
};

}  // namespace terrainguard
