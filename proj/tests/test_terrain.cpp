#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "terrainguard/errors.hpp"
#include "terrainguard/terrain.hpp"

using namespace terrainguard;
using tgtest::at_xs;
using tgtest::sees_by_sampling;
using tgtest::w_terrain;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("7/3").str() == "7/3");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("42").str() == "42");
  CHECK(Rational::parse("0/5") == Rational(0));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1 2"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), ValidationError);
}

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a / b) == Rational(2));
  CHECK_THROWS_AS(a / Rational(0), ValidationError);
  // no drift over many accumulations
  Rational sum = 0;
  for (int i = 0; i < 300; ++i) sum += Rational(1, 300);
  CHECK(sum == Rational(1));
}

TEST_CASE("terrain construction validates and normalizes") {
  Terrain flat = Terrain::make({{0, 0}, {10, 0}});
  CHECK(flat.vertex_count() == 2);

  Terrain collinear = Terrain::make({{0, 0}, {5, 0}, {10, 0}});
  CHECK(collinear.vertex_count() == 2);
  CHECK(collinear.vertices()[0].x == Rational(0));
  CHECK(collinear.vertices()[1].x == Rational(10));

  // collinear run on a slope collapses too
  Terrain slope = Terrain::make({{0, 0}, {1, 1}, {2, 2}, {3, 1}});
  CHECK(slope.vertex_count() == 3);

  CHECK_THROWS_AS(Terrain::make({{0, 0}, {0, 1}}), ValidationError);
  CHECK_THROWS_AS(Terrain::make({{0, 0}}), ValidationError);
  CHECK_THROWS_AS(Terrain::make({}), ValidationError);
  CHECK_THROWS_AS(Terrain::make({{1, 0}, {0, 0}}), ValidationError);
}

TEST_CASE("point_at interpolates exactly") {
  Terrain t = Terrain::make({{0, 0}, {4, 4}});
  CHECK(t.point_at(2).y == Rational(2));
  CHECK(t.point_at(Rational(1, 3)).y == Rational(1, 3));

  Terrain t2 = Terrain::make({{0, 4}, {2, 0}, {4, 2}});
  CHECK(t2.point_at(3).y == Rational(1));
  CHECK(t2.point_at(2).y == Rational(0));

  CHECK_THROWS_AS(t.point_at(5), ValidationError);
  CHECK_THROWS_AS(t.point_at(-1), ValidationError);
}

TEST_CASE("visibility on the w-shaped fixture") {
  Terrain t = w_terrain();
  auto p = [&](long x) { return t.point_at(x); };
  CHECK(t.sees(p(0), p(8)));        // ridge-to-ridge above everything
  CHECK_FALSE(t.sees(p(2), p(6)));  // middle peak blocks the two pits
  CHECK_FALSE(t.sees(p(0), p(6)));  // line from (0,4) to (6,0) passes under (4,2)
  CHECK(t.sees(p(0), p(4)));
  CHECK(t.sees(p(4), p(6)));

  // independent oracle agrees on these
  CHECK(sees_by_sampling(t, p(0), p(8)));
  CHECK_FALSE(sees_by_sampling(t, p(2), p(6)));
  CHECK_FALSE(sees_by_sampling(t, p(0), p(6)));
}

TEST_CASE("visibility is reflexive and symmetric, adjacent vertices see each other") {
  Rng rng(7001);
  for (int round = 0; round < 30; ++round) {
    Terrain t = random_terrain(rng, static_cast<int>(rng.range(2, 12)));
    auto pts = random_chain_points(rng, t, 6);
    for (const auto& a : pts) {
      CHECK(t.sees(a, a));
      for (const auto& b : pts) CHECK(t.sees(a, b) == t.sees(b, a));
    }
    const auto& vs = t.vertices();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) CHECK(t.sees(vs[i], vs[i + 1]));
  }
}

TEST_CASE("sees agrees with the sampling oracle on random pairs") {
  Rng rng(7002);
  int checked = 0;
  for (int round = 0; round < 40; ++round) {
    Terrain t = random_terrain(rng, static_cast<int>(rng.range(2, 14)));
    auto pts = random_chain_points(rng, t, 6);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i; j < pts.size(); ++j) {
        CHECK(t.sees(pts[i], pts[j]) == sees_by_sampling(t, pts[i], pts[j]));
        ++checked;
      }
  }
  CHECK(checked >= 500);
}

TEST_CASE("order claim: crossing visibilities imply the outer pair sees") {
  Rng rng(7003);
  for (int round = 0; round < 25; ++round) {
    Terrain t = random_terrain(rng, static_cast<int>(rng.range(3, 16)));
    auto pts = random_chain_points(rng, t, 8);  // sorted by construction
    const std::size_t n = pts.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c)
          for (std::size_t d = c + 1; d < n; ++d)
            if (t.sees(pts[a], pts[c]) && t.sees(pts[b], pts[d]))
              CHECK(t.sees(pts[a], pts[d]));
  }
}

TEST_CASE("huge coordinates: predicates stay exact where doubles collapse") {
  // peak displaced from the chord by 2^-100 at abscissa 2^200: the sign of
  // the orientation test is far below double precision either way
  Rational n = Rational(1);
  for (int i = 0; i < 200; ++i) n *= Rational(2);
  Rational tiny = Rational(1);
  for (int i = 0; i < 100; ++i) tiny /= Rational(2);

  Terrain above = Terrain::make({{0, 0}, {n, Rational(1) + tiny}, {n * Rational(2), 2}});
  CHECK_FALSE(above.sees(above.point_at(0), above.point_at(n * Rational(2))));

  Terrain below = Terrain::make({{0, 0}, {n, Rational(1) - tiny}, {n * Rational(2), 2}});
  CHECK(below.sees(below.point_at(0), below.point_at(n * Rational(2))));

  // exactly on the chord: the middle vertex is collinear and normalizes away
  Terrain on = Terrain::make({{0, 0}, {n, 1}, {n * Rational(2), 2}});
  CHECK(on.vertex_count() == 2);
}

TEST_CASE("visibility is invariant under positive rational rescaling") {
  Rng rng(7004);
  const std::vector<Rational> scales = {Rational(3, 7), Rational(5), Rational(1, 9), Rational(13, 2)};
  for (int round = 0; round < 20; ++round) {
    Terrain t = random_terrain(rng, static_cast<int>(rng.range(2, 10)));
    auto pts = random_chain_points(rng, t, 5);
    for (const auto& s : scales) {
      std::vector<std::pair<Rational, Rational>> scaled;
      for (const auto& v : t.vertices()) scaled.emplace_back(v.x * s, v.y * s);
      Terrain ts = Terrain::make(scaled);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j)
          CHECK(t.sees(pts[i], pts[j]) ==
                ts.sees(ts.point_at(pts[i].x * s), ts.point_at(pts[j].x * s)));
    }
  }
}
