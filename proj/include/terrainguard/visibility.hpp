#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "terrainguard/terrain.hpp"

namespace terrainguard {

// Direction a guard is committed to. Left guards cover points strictly to
// their right looking left... precisely: a left guard g covers p iff g < p,
// a right guard g covers p iff g > p, a both-ways guard covers any p it sees
// (including itself).
enum class Side { Left, Right, Both };

const char* side_name(Side s);
Side side_from_name(const std::string& name);

struct GuardSpec {
  TerrainPoint point;
  Side side = Side::Both;
};

// Binary point x guard incidence matrix. Row and column labels travel with
// the matrix so permutations stay reversible and solutions map back to
// guards. entries[i][j] = 1 iff guard j covers point i under its side rule.
class VisibilityMatrix {
 public:
  VisibilityMatrix() = default;
  VisibilityMatrix(std::vector<std::vector<std::uint8_t>> entries,
                   std::vector<TerrainPoint> row_labels, std::vector<GuardSpec> col_labels);

  static VisibilityMatrix build(const Terrain& terrain, const std::vector<TerrainPoint>& points,
                                const std::vector<GuardSpec>& guards);

  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  bool at(std::size_t i, std::size_t j) const { return entries_[i][j] != 0; }
  const std::vector<std::vector<std::uint8_t>>& entries() const { return entries_; }
  const TerrainPoint& row_label(std::size_t i) const { return row_labels_[i]; }
  const GuardSpec& col_label(std::size_t j) const { return col_labels_[j]; }
  const std::vector<TerrainPoint>& row_labels() const { return row_labels_; }
  const std::vector<GuardSpec>& col_labels() const { return col_labels_; }

  VisibilityMatrix permuted(const std::vector<std::size_t>& row_perm,
                            const std::vector<std::size_t>& col_perm) const;

  // Plain 0/1 grid, one row per line.
  std::string to_text() const;

 private:
  std::vector<std::vector<std::uint8_t>> entries_;
  std::vector<TerrainPoint> row_labels_;
  std::vector<GuardSpec> col_labels_;
};

// S(p), S_L(p), S_R(p) for one point, as indices into the guard list.
// left/right use strict x comparison; a guard at p's own x is only in `all`.
struct PointVisibility {
  std::vector<int> all;
  std::vector<int> left;
  std::vector<int> right;
};

std::vector<PointVisibility> visibility_sets(const Terrain& terrain,
                                             const std::vector<TerrainPoint>& points,
                                             const std::vector<TerrainPoint>& guards);

// Greedy standard form ordering for a pure one-sided matrix: for left
// visibility, points left to right and guards right to left; mirrored for
// right visibility. Throws ValidationError on mixed-side or both-side columns.
VisibilityMatrix sort_greedy_standard(const VisibilityMatrix& m);

struct ForbiddenSubmatrix {
  std::size_t row1, row2;  // row1 < row2
  std::size_t col1, col2;  // col1 < col2
};

// Scans for the induced 2x2 pattern [[1,1],[1,0]]; returns the first witness
// in lexicographic order, or nullopt when the matrix is in greedy standard
// form. Direct bounded scan with early exit; certifiable by construction.
std::optional<ForbiddenSubmatrix> find_forbidden_submatrix(const VisibilityMatrix& m);

// Split of a one-sided matrix into a left-columns part and a right-columns
// part with disjoint supports summing to the original.
struct Decomposition {
  VisibilityMatrix left_part;
  VisibilityMatrix right_part;
};

Decomposition two_separable_decompose(const VisibilityMatrix& m);

// Checks one row mixture of a decomposition (take_right[i] = 1 takes row i
// from right_part, else left_part): rows grouped by origin must form a block
// matrix whose diagonal blocks each sort into greedy standard form.
bool mixture_totally_balanced(const Decomposition& d, const std::vector<std::uint8_t>& take_right);

}  // namespace terrainguard
