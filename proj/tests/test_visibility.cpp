#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "terrainguard/errors.hpp"
#include "terrainguard/visibility.hpp"

using namespace terrainguard;
using tgtest::at_xs;
using tgtest::flat_terrain;
using tgtest::mirrored;
using tgtest::mirrored_points;
using tgtest::w_terrain;

namespace {

std::vector<GuardSpec> specs(const std::vector<TerrainPoint>& pts, Side side) {
  std::vector<GuardSpec> out;
  for (const auto& p : pts) out.push_back(GuardSpec{p, side});
  return out;
}

VisibilityMatrix random_left_matrix(Rng& rng) {
  Terrain t = random_terrain(rng, static_cast<int>(rng.range(2, 12)));
  auto points = random_chain_points(rng, t, static_cast<int>(rng.range(1, 10)));
  auto guards = random_chain_points(rng, t, static_cast<int>(rng.range(1, 8)));
  return VisibilityMatrix::build(t, points, specs(guards, Side::Left));
}

}  // namespace

TEST_CASE("visibility sets on a flat terrain") {
  Terrain t = flat_terrain(8);
  auto sets = visibility_sets(t, at_xs(t, {4}), at_xs(t, {2, 4, 6}));
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].all == std::vector<int>{0, 1, 2});
  CHECK(sets[0].left == std::vector<int>{0});   // strict: the guard at 4 is not left of 4
  CHECK(sets[0].right == std::vector<int>{2});
}

TEST_CASE("visibility sets on the w fixture") {
  Terrain t = w_terrain();
  auto sets = visibility_sets(t, at_xs(t, {6}), at_xs(t, {0, 2, 4, 6, 8}));
  REQUIRE(sets.size() == 1);
  CHECK(sets[0].left == std::vector<int>{2});   // only the middle peak sees x=6 from the left
  CHECK(sets[0].right == std::vector<int>{4});
  CHECK(sets[0].all == std::vector<int>{2, 3, 4});
}

TEST_CASE("visibility sets with no guards") {
  Terrain t = flat_terrain();
  auto sets = visibility_sets(t, at_xs(t, {1, 5}), {});
  for (const auto& s : sets) {
    CHECK(s.all.empty());
    CHECK(s.left.empty());
    CHECK(s.right.empty());
  }
}

TEST_CASE("matrix construction matches the visibility rules") {
  Terrain flat = flat_terrain();
  VisibilityMatrix one =
      VisibilityMatrix::build(flat, at_xs(flat, {5}), specs(at_xs(flat, {1}), Side::Left));
  CHECK(one.rows() == 1);
  CHECK(one.cols() == 1);
  CHECK(one.at(0, 0));
  CHECK(one.to_text() == "1\n");

  VisibilityMatrix two =
      VisibilityMatrix::build(flat, at_xs(flat, {2, 4}), specs(at_xs(flat, {0, 3}), Side::Left));
  CHECK(two.to_text() == "10\n11\n");

  Terrain w = w_terrain();
  VisibilityMatrix wm =
      VisibilityMatrix::build(w, at_xs(w, {2, 6}), specs(at_xs(w, {0, 4}), Side::Left));
  CHECK(wm.to_text() == "10\n01\n");
}

TEST_CASE("matrix agrees with visibility_sets entrywise") {
  Rng rng(8101);
  for (int round = 0; round < 1000; ++round) {
    Terrain t = random_terrain(rng, static_cast<int>(rng.range(2, 10)));
    auto points = random_chain_points(rng, t, static_cast<int>(rng.range(1, 6)));
    auto guards = random_chain_points(rng, t, static_cast<int>(rng.range(1, 6)));
    auto sets = visibility_sets(t, points, guards);
    VisibilityMatrix all = VisibilityMatrix::build(t, points, specs(guards, Side::Both));
    VisibilityMatrix left = VisibilityMatrix::build(t, points, specs(guards, Side::Left));
    VisibilityMatrix right = VisibilityMatrix::build(t, points, specs(guards, Side::Right));
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t j = 0; j < guards.size(); ++j) {
        auto in = [&](const std::vector<int>& v) {
          return std::find(v.begin(), v.end(), static_cast<int>(j)) != v.end();
        };
        CHECK(all.at(i, j) == in(sets[i].all));
        CHECK(left.at(i, j) == in(sets[i].left));
        CHECK(right.at(i, j) == in(sets[i].right));
      }
    }
  }
}

TEST_CASE("greedy standard form ordering") {
  Terrain flat = flat_terrain();
  // points ascending, guards descending: already in standard form
  VisibilityMatrix sorted =
      VisibilityMatrix::build(flat, at_xs(flat, {2, 4}), specs(at_xs(flat, {3, 0}), Side::Left));
  CHECK(sort_greedy_standard(sorted).to_text() == sorted.to_text());

  VisibilityMatrix single =
      VisibilityMatrix::build(flat, at_xs(flat, {5}), specs(at_xs(flat, {1}), Side::Left));
  CHECK(sort_greedy_standard(single).to_text() == "1\n");

  // mixed or both-sided columns are rejected
  std::vector<GuardSpec> mixed = {GuardSpec{flat.point_at(1), Side::Left},
                                  GuardSpec{flat.point_at(9), Side::Right}};
  VisibilityMatrix bad = VisibilityMatrix::build(flat, at_xs(flat, {5}), mixed);
  CHECK_THROWS_AS(sort_greedy_standard(bad), ValidationError);
  VisibilityMatrix both =
      VisibilityMatrix::build(flat, at_xs(flat, {5}), specs(at_xs(flat, {1}), Side::Both));
  CHECK_THROWS_AS(sort_greedy_standard(both), ValidationError);
}

TEST_CASE("forbidden submatrix scan") {
  Terrain flat = flat_terrain();
  // guards at {0,3}, points at {4,2}: rows give [[1,1],[1,0]]
  VisibilityMatrix m =
      VisibilityMatrix::build(flat, at_xs(flat, {4, 2}), specs(at_xs(flat, {0, 3}), Side::Left));
  REQUIRE(m.to_text() == "11\n10\n");
  auto w = find_forbidden_submatrix(m);
  REQUIRE(w.has_value());
  CHECK(w->row1 == 0);
  CHECK(w->row2 == 1);
  CHECK(w->col1 == 0);
  CHECK(w->col2 == 1);
  // the witness is the pattern itself
  CHECK(m.at(w->row1, w->col1));
  CHECK(m.at(w->row1, w->col2));
  CHECK(m.at(w->row2, w->col1));
  CHECK_FALSE(m.at(w->row2, w->col2));

  VisibilityMatrix ones =
      VisibilityMatrix::build(flat, at_xs(flat, {4, 6}), specs(at_xs(flat, {0, 1}), Side::Left));
  REQUIRE(ones.to_text() == "11\n11\n");
  CHECK_FALSE(find_forbidden_submatrix(ones).has_value());
}

TEST_CASE("left-visibility matrices sort into greedy standard form") {
  Rng rng(8102);
  for (int round = 0; round < 250; ++round) {
    VisibilityMatrix m = random_left_matrix(rng);
    CHECK_FALSE(find_forbidden_submatrix(sort_greedy_standard(m)).has_value());
  }
}

TEST_CASE("right-visibility matrices sort under the mirror order") {
  Rng rng(8103);
  for (int round = 0; round < 100; ++round) {
    Terrain t = random_terrain(rng, static_cast<int>(rng.range(2, 12)));
    auto points = random_chain_points(rng, t, static_cast<int>(rng.range(1, 8)));
    auto guards = random_chain_points(rng, t, static_cast<int>(rng.range(1, 6)));
    VisibilityMatrix m = VisibilityMatrix::build(t, points, specs(guards, Side::Right));
    CHECK_FALSE(find_forbidden_submatrix(sort_greedy_standard(m)).has_value());
  }
}

TEST_CASE("mirroring the terrain swaps left and right visibility") {
  Rng rng(8104);
  for (int round = 0; round < 100; ++round) {
    Terrain t = random_terrain(rng, static_cast<int>(rng.range(2, 10)));
    auto points = random_chain_points(rng, t, static_cast<int>(rng.range(1, 6)));
    auto guards = random_chain_points(rng, t, static_cast<int>(rng.range(1, 6)));
    Terrain mt = mirrored(t);
    auto mpoints = mirrored_points(mt, points);
    auto mguards = mirrored_points(mt, guards);
    VisibilityMatrix left = VisibilityMatrix::build(t, points, specs(guards, Side::Left));
    VisibilityMatrix right = VisibilityMatrix::build(mt, mpoints, specs(mguards, Side::Right));
    CHECK(left.to_text() == right.to_text());
  }
}

TEST_CASE("two-separable decomposition splits supports exactly") {
  Terrain flat = flat_terrain();
  std::vector<GuardSpec> cols = {GuardSpec{flat.point_at(1), Side::Left},
                                 GuardSpec{flat.point_at(9), Side::Right}};
  VisibilityMatrix m = VisibilityMatrix::build(flat, at_xs(flat, {5}), cols);
  REQUIRE(m.to_text() == "11\n");
  Decomposition d = two_separable_decompose(m);
  CHECK(d.left_part.to_text() == "10\n");
  CHECK(d.right_part.to_text() == "01\n");

  // left-only matrix: right part is all zero
  VisibilityMatrix lonly =
      VisibilityMatrix::build(flat, at_xs(flat, {4, 6}), specs(at_xs(flat, {0, 2}), Side::Left));
  Decomposition d2 = two_separable_decompose(lonly);
  CHECK(d2.left_part.to_text() == lonly.to_text());
  CHECK(d2.right_part.to_text() == "00\n00\n");

  VisibilityMatrix both =
      VisibilityMatrix::build(flat, at_xs(flat, {5}), specs(at_xs(flat, {1}), Side::Both));
  CHECK_THROWS_AS(two_separable_decompose(both), ValidationError);
}

TEST_CASE("decomposition parts sum to the original with disjoint supports") {
  Rng rng(8105);
  for (int round = 0; round < 100; ++round) {
    Terrain t = random_terrain(rng, static_cast<int>(rng.range(2, 10)));
    auto points = random_chain_points(rng, t, static_cast<int>(rng.range(1, 8)));
    auto gl = random_chain_points(rng, t, static_cast<int>(rng.range(1, 4)));
    auto gr = random_chain_points(rng, t, static_cast<int>(rng.range(1, 4)));
    std::vector<GuardSpec> cols = specs(gl, Side::Left);
    for (const auto& g : specs(gr, Side::Right)) cols.push_back(g);
    VisibilityMatrix m = VisibilityMatrix::build(t, points, cols);
    Decomposition d = two_separable_decompose(m);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        CHECK(static_cast<int>(m.at(i, j)) ==
              static_cast<int>(d.left_part.at(i, j)) + static_cast<int>(d.right_part.at(i, j)));
        CHECK_FALSE((d.left_part.at(i, j) && d.right_part.at(i, j)));
      }

    // every random row mixture stays totally balanced, blockwise
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<std::uint8_t> take_right(m.rows());
      for (auto& b : take_right) b = static_cast<std::uint8_t>(rng.range(0, 1));
      CHECK(mixture_totally_balanced(d, take_right));
    }
  }
}
