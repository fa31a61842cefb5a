#include "terrainguard/visibility.hpp"

#include <algorithm>
#include <numeric>

#include "terrainguard/errors.hpp"

namespace terrainguard {

const char* side_name(Side s) {
  switch (s) {
    case Side::Left: return "left";
    case Side::Right: return "right";
    case Side::Both: return "both";
  }
  return "?";
}

Side side_from_name(const std::string& name) {
  if (name == "left") return Side::Left;
  if (name == "right") return Side::Right;
  if (name == "both") return Side::Both;
  throw ParseError("unknown side '" + name + "' (expected left, right or both)");
}

namespace {

bool covers(const Terrain& t, const GuardSpec& g, const TerrainPoint& p) {
  switch (g.side) {
    case Side::Left:
      if (!(g.point.x < p.x)) return false;
      break;
    case Side::Right:
      if (!(g.point.x > p.x)) return false;
      break;
    case Side::Both:
      break;
  }
  return t.sees(g.point, p);
}

}  // namespace

VisibilityMatrix::VisibilityMatrix(std::vector<std::vector<std::uint8_t>> entries,
                                   std::vector<TerrainPoint> row_labels,
                                   std::vector<GuardSpec> col_labels)
    : entries_(std::move(entries)),
      row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)) {
  if (entries_.size() != row_labels_.size())
    throw ValidationError("matrix row count does not match row labels");
  for (const auto& row : entries_)
    if (row.size() != col_labels_.size())
      throw ValidationError("matrix column count does not match column labels");
}

VisibilityMatrix VisibilityMatrix::build(const Terrain& terrain,
                                         const std::vector<TerrainPoint>& points,
                                         const std::vector<GuardSpec>& guards) {
  std::vector<std::vector<std::uint8_t>> entries(points.size(),
                                                 std::vector<std::uint8_t>(guards.size(), 0));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < guards.size(); ++j)
      entries[i][j] = covers(terrain, guards[j], points[i]) ? 1 : 0;
  return VisibilityMatrix(std::move(entries), points, guards);
}

VisibilityMatrix VisibilityMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                            const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows() || col_perm.size() != cols())
    throw ValidationError("permutation size mismatch");
  std::vector<std::vector<std::uint8_t>> entries(rows(), std::vector<std::uint8_t>(cols(), 0));
  std::vector<TerrainPoint> rl;
  std::vector<GuardSpec> cl;
  rl.reserve(rows());
  cl.reserve(cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    rl.push_back(row_labels_[row_perm[i]]);
    for (std::size_t j = 0; j < cols(); ++j) entries[i][j] = entries_[row_perm[i]][col_perm[j]];
  }
  for (std::size_t j = 0; j < cols(); ++j) cl.push_back(col_labels_[col_perm[j]]);
  return VisibilityMatrix(std::move(entries), std::move(rl), std::move(cl));
}

std::string VisibilityMatrix::to_text() const {
  std::string out;
  out.reserve(rows() * (cols() + 1));
  for (const auto& row : entries_) {
    for (auto e : row) out.push_back(e ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::vector<PointVisibility> visibility_sets(const Terrain& terrain,
                                             const std::vector<TerrainPoint>& points,
                                             const std::vector<TerrainPoint>& guards) {
  std::vector<PointVisibility> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < guards.size(); ++j) {
      if (!terrain.sees(guards[j], points[i])) continue;
      out[i].all.push_back(static_cast<int>(j));
      if (guards[j].x < points[i].x) out[i].left.push_back(static_cast<int>(j));
      else if (guards[j].x > points[i].x) out[i].right.push_back(static_cast<int>(j));
    }
  }
  return out;
}

VisibilityMatrix sort_greedy_standard(const VisibilityMatrix& m) {
  Side side = Side::Both;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Side s = m.col_label(j).side;
    if (s == Side::Both)
      throw ValidationError("greedy standard form needs one-sided columns, column " +
                            std::to_string(j) + " is both-sided");
    if (j == 0) side = s;
    else if (s != side)
      throw ValidationError("greedy standard form needs same-side columns, column " +
                            std::to_string(j) + " differs");
  }

  std::vector<std::size_t> row_perm(m.rows());
  std::vector<std::size_t> col_perm(m.cols());
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  const bool left = side != Side::Right;  // empty matrix sorts as left
  std::stable_sort(row_perm.begin(), row_perm.end(), [&](std::size_t a, std::size_t b) {
    return left ? m.row_label(a).x < m.row_label(b).x : m.row_label(a).x > m.row_label(b).x;
  });
  std::stable_sort(col_perm.begin(), col_perm.end(), [&](std::size_t a, std::size_t b) {
    return left ? m.col_label(a).point.x > m.col_label(b).point.x
                : m.col_label(a).point.x < m.col_label(b).point.x;
  });
  return m.permuted(row_perm, col_perm);
}

std::optional<ForbiddenSubmatrix> find_forbidden_submatrix(const VisibilityMatrix& m) {
  for (std::size_t i1 = 0; i1 + 1 < m.rows(); ++i1)
    for (std::size_t i2 = i1 + 1; i2 < m.rows(); ++i2)
      for (std::size_t j1 = 0; j1 + 1 < m.cols(); ++j1) {
        if (!m.at(i1, j1) || !m.at(i2, j1)) continue;
        for (std::size_t j2 = j1 + 1; j2 < m.cols(); ++j2)
          if (m.at(i1, j2) && !m.at(i2, j2)) return ForbiddenSubmatrix{i1, i2, j1, j2};
      }
  return std::nullopt;
}

Decomposition two_separable_decompose(const VisibilityMatrix& m) {
  std::vector<std::vector<std::uint8_t>> left(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
  std::vector<std::vector<std::uint8_t>> right = left;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const Side s = m.col_label(j).side;
    if (s == Side::Both)
      throw ValidationError("decomposition needs columns partitioned into left/right, column " +
                            std::to_string(j) + " is both-sided");
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m.at(i, j)) continue;
      (s == Side::Left ? left : right)[i][j] = 1;
    }
  }
  return Decomposition{VisibilityMatrix(std::move(left), m.row_labels(), m.col_labels()),
                       VisibilityMatrix(std::move(right), m.row_labels(), m.col_labels())};
}

bool mixture_totally_balanced(const Decomposition& d, const std::vector<std::uint8_t>& take_right) {
  const VisibilityMatrix& l = d.left_part;
  const VisibilityMatrix& r = d.right_part;
  if (take_right.size() != l.rows() || l.rows() != r.rows())
    throw ValidationError("mixture selector size mismatch");

  // Diagonal blocks of the origin-grouped matrix: left-origin rows restricted
  // to left columns, right-origin rows restricted to right columns. The
  // off-diagonal blocks are zero by construction of the decomposition.
  for (Side side : {Side::Left, Side::Right}) {
    const VisibilityMatrix& part = side == Side::Left ? l : r;
    std::vector<TerrainPoint> pts;
    std::vector<GuardSpec> gds;
    std::vector<std::size_t> col_idx;
    for (std::size_t j = 0; j < part.cols(); ++j)
      if (part.col_label(j).side == side) {
        col_idx.push_back(j);
        gds.push_back(part.col_label(j));
      }
    std::vector<std::vector<std::uint8_t>> block;
    for (std::size_t i = 0; i < part.rows(); ++i) {
      if ((take_right[i] != 0) != (side == Side::Right)) continue;
      std::vector<std::uint8_t> row;
      row.reserve(col_idx.size());
      for (std::size_t j : col_idx) row.push_back(part.at(i, j) ? 1 : 0);
      block.push_back(std::move(row));
      pts.push_back(part.row_label(i));
    }
    VisibilityMatrix b(std::move(block), std::move(pts), std::move(gds));
    if (b.cols() == 0) continue;
    if (find_forbidden_submatrix(sort_greedy_standard(b)).has_value()) return false;
  }
  return true;
}

}  // namespace terrainguard
