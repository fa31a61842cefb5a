#include "terrainguard/solvers.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "terrainguard/errors.hpp"

namespace terrainguard {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::OneSided: return "one_sided";
    case Mode::DiscreteBothWays: return "discrete_both_ways";
    case Mode::Continuous: return "continuous";
  }
  return "?";
}

Mode mode_from_name(const std::string& name) {
  if (name == "one_sided") return Mode::OneSided;
  if (name == "discrete_both_ways" || name == "discrete") return Mode::DiscreteBothWays;
  if (name == "continuous") return Mode::Continuous;
  throw ParseError("unknown mode '" + name + "'");
}

namespace {

using Bitrow = std::vector<std::uint8_t>;

// Visibility of every (point, guard) pair, one sees() call each, with the
// strict one-sided restrictions derived from it.
struct SideMatrices {
  std::vector<Bitrow> both, left, right;
};

SideMatrices side_visibility(const Terrain& t, const std::vector<TerrainPoint>& points,
                             const std::vector<TerrainPoint>& guards) {
  SideMatrices m;
  m.both.assign(points.size(), Bitrow(guards.size(), 0));
  m.left = m.both;
  m.right = m.both;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < guards.size(); ++j) {
      if (!t.sees(guards[j], points[i])) continue;
      m.both[i][j] = 1;
      if (guards[j].x < points[i].x) m.left[i][j] = 1;
      else if (guards[j].x > points[i].x) m.right[i][j] = 1;
    }
  }
  return m;
}

std::vector<Rational> resolve_weights(const std::vector<Rational>& w, std::size_t n,
                                      const char* what) {
  if (w.empty()) return std::vector<Rational>(n, Rational(1));
  if (w.size() != n)
    throw ValidationError(std::string(what) + ": expected " + std::to_string(n) + " weights, got " +
                          std::to_string(w.size()));
  return w;
}

// Optimal one-sided guarding from prebuilt strict-side rows. The covering
// matrix is totally balanced, so the basic optimal LP solution is integral.
Solution optimal_from_rows(const std::vector<Bitrow>& rows,
                           const std::vector<TerrainPoint>& row_points,
                           const std::vector<TerrainPoint>& guards,
                           const std::vector<Rational>& weights, Side side) {
  Solution out;
  out.cost = 0;
  if (rows.empty()) return out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (std::find(rows[i].begin(), rows[i].end(), std::uint8_t(1)) == rows[i].end())
      throw InfeasibleError(row_points[i].x.str(),
                            "point x=" + row_points[i].x.str() + " has no " +
                                side_name(side) + "-side guard seeing it");
  }
  CoveringLP lp(rows, weights);
  FractionalSolution sol = solve_covering_lp(lp);
  if (!is_integral(sol))
    throw std::logic_error("one-sided covering solution came back fractional");
  for (std::size_t j = 0; j < guards.size(); ++j)
    if (sol.values[j] == Rational(1)) out.picks.push_back(Pick{guards[j], side});
  out.cost = sol.objective;
  return out;
}

}  // namespace

std::optional<TerrainPoint> leftmost_seer(const Terrain& terrain, const TerrainPoint& p,
                                          const std::vector<TerrainPoint>& guards) {
  std::optional<TerrainPoint> best;
  for (const auto& g : guards) {
    if (!(g.x < p.x)) continue;
    if (best && !(g.x < best->x)) continue;
    if (terrain.sees(g, p)) best = g;
  }
  return best;
}

GreedyResult uniform_left_guarding(const Terrain& terrain,
                                   const std::vector<TerrainPoint>& points,
                                   const std::vector<TerrainPoint>& guards) {
  GreedyResult result;
  result.solution.cost = 0;
  if (points.empty()) return result;

  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a].x < points[b].x; });

  SideMatrices m = side_visibility(terrain, points, guards);

  // leftmost seer per point, rejecting unguardable points up front
  std::vector<std::size_t> seer(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::size_t best = guards.size();
    for (std::size_t j = 0; j < guards.size(); ++j) {
      if (!m.left[i][j]) continue;
      if (best == guards.size() || guards[j].x < guards[best].x) best = j;
    }
    if (best == guards.size())
      throw InfeasibleError(points[i].x.str(),
                            "point x=" + points[i].x.str() + " has no left-side guard seeing it");
    seer[i] = best;
  }

  std::vector<std::size_t> added;
  for (std::size_t i : order) {
    bool seen = false;
    for (std::size_t j : added) seen = seen || m.left[i][j];
    if (seen) continue;
    added.push_back(seer[i]);
    result.witnesses.push_back(points[i]);
  }
  for (std::size_t j : added) result.solution.picks.push_back(Pick{guards[j], Side::Left});
  result.solution.cost = Rational(static_cast<long>(added.size()));
  return result;
}

Solution weighted_one_sided_optimal(const Terrain& terrain,
                                    const std::vector<TerrainPoint>& points,
                                    const std::vector<TerrainPoint>& guards, Side side,
                                    const std::vector<Rational>& weights) {
  if (side == Side::Both)
    throw ValidationError("one-sided optimal solver needs side left or right");
  const auto w = resolve_weights(weights, guards.size(), "one-sided optimal");
  if (points.empty()) return Solution{{}, 0};
  SideMatrices m = side_visibility(terrain, points, guards);
  return optimal_from_rows(side == Side::Left ? m.left : m.right, points, guards, w, side);
}

OneSidedRun one_sided_two_approx(const Terrain& terrain, const std::vector<TerrainPoint>& points,
                                 const std::vector<TerrainPoint>& left_guards,
                                 const std::vector<TerrainPoint>& right_guards,
                                 const std::vector<Rational>& left_weights,
                                 const std::vector<Rational>& right_weights) {
  const auto wl = resolve_weights(left_weights, left_guards.size(), "left guards");
  const auto wr = resolve_weights(right_weights, right_guards.size(), "right guards");

  OneSidedRun run;
  run.solution.cost = 0;
  run.lp_value = 0;
  run.in_left.assign(points.size(), 0);
  run.in_right.assign(points.size(), 0);
  if (points.empty()) return run;

  SideMatrices ml = side_visibility(terrain, points, left_guards);
  SideMatrices mr = side_visibility(terrain, points, right_guards);

  const std::size_t nl = left_guards.size();
  const std::size_t nr = right_guards.size();
  std::vector<Bitrow> lp_rows(points.size(), Bitrow(nl + nr, 0));
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool any = false;
    for (std::size_t j = 0; j < nl; ++j) {
      lp_rows[i][j] = ml.left[i][j];
      any = any || ml.left[i][j];
    }
    for (std::size_t j = 0; j < nr; ++j) {
      lp_rows[i][nl + j] = mr.right[i][j];
      any = any || mr.right[i][j];
    }
    if (!any)
      throw InfeasibleError(points[i].x.str(),
                            "point x=" + points[i].x.str() +
                                " is seen neither from the left nor from the right");
  }

  std::vector<Rational> lp_w = wl;
  lp_w.insert(lp_w.end(), wr.begin(), wr.end());
  FractionalSolution frac = solve_covering_lp(CoveringLP(lp_rows, lp_w));
  run.lp_value = frac.objective;

  const Rational half(1, 2);
  std::vector<TerrainPoint> pts_left, pts_right;
  std::vector<Bitrow> rows_left, rows_right;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Rational left_mass = 0, right_mass = 0;
    for (std::size_t j = 0; j < nl; ++j)
      if (ml.left[i][j]) left_mass += frac.values[j];
    for (std::size_t j = 0; j < nr; ++j)
      if (mr.right[i][j]) right_mass += frac.values[nl + j];
    run.in_left[i] = left_mass >= half ? 1 : 0;
    run.in_right[i] = right_mass >= half ? 1 : 0;
    if (!run.in_left[i] && !run.in_right[i])
      throw std::logic_error("fractional split left a point on neither side");
    if (run.in_left[i]) {
      pts_left.push_back(points[i]);
      rows_left.push_back(ml.left[i]);
    }
    if (run.in_right[i]) {
      pts_right.push_back(points[i]);
      rows_right.push_back(mr.right[i]);
    }
  }

  Solution a_l = optimal_from_rows(rows_left, pts_left, left_guards, wl, Side::Left);
  Solution a_r = optimal_from_rows(rows_right, pts_right, right_guards, wr, Side::Right);
  run.solution.picks = a_l.picks;
  run.solution.picks.insert(run.solution.picks.end(), a_r.picks.begin(), a_r.picks.end());
  run.solution.cost = a_l.cost + a_r.cost;
  return run;
}

namespace {

// x where the line through (a, b) crosses the line supporting (c, d).
// Both lines are graphs over x, so a unique crossing exists iff the slopes
// differ. Returns false on parallel (including collinear) lines.
bool line_crossing_x(const TerrainPoint& a, const TerrainPoint& b, const TerrainPoint& c,
                     const TerrainPoint& d, Rational& x_out) {
  const Rational s1 = (b.y - a.y) / (b.x - a.x);
  const Rational s2 = (d.y - c.y) / (d.x - c.x);
  if (s1 == s2) return false;
  x_out = (c.y - a.y + s1 * a.x - s2 * c.x) / (s1 - s2);
  return true;
}

// Nearest chain point beyond the pair (v1 < v2), on the given side, where the
// line through v1 and v2 meets the chain again and still sees both vertices.
std::optional<Rational> line_terrain_hit(const Terrain& t, const TerrainPoint& v1,
                                         const TerrainPoint& v2, bool rightward) {
  const auto& verts = t.vertices();
  const std::size_t n = verts.size();
  auto try_edge = [&](std::size_t e) -> std::optional<Rational> {
    Rational x;
    if (!line_crossing_x(v1, v2, verts[e], verts[e + 1], x)) return std::nullopt;
    if (x < verts[e].x || x > verts[e + 1].x) return std::nullopt;
    if (rightward ? !(x > v2.x) : !(x < v1.x)) return std::nullopt;
    TerrainPoint q = t.point_at(x);
    if (t.sees(q, v1) && t.sees(q, v2)) return x;
    return std::nullopt;
  };
  if (rightward) {
    for (std::size_t e = 0; e + 1 < n; ++e) {
      if (verts[e + 1].x <= v2.x) continue;
      if (auto x = try_edge(e)) return x;
    }
  } else {
    for (std::size_t e = n - 1; e-- > 0;) {
      if (verts[e].x >= v1.x) continue;
      if (auto x = try_edge(e)) return x;
    }
  }
  return std::nullopt;
}

}  // namespace

EssentialSegments essential_segments(const Terrain& terrain) {
  const auto& verts = terrain.vertices();
  std::set<Rational> xs;
  for (const auto& v : verts) xs.insert(v.x);

  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (!terrain.sees(verts[i], verts[j])) continue;
      if (auto x = line_terrain_hit(terrain, verts[i], verts[j], /*rightward=*/true))
        xs.insert(*x);
      if (auto x = line_terrain_hit(terrain, verts[i], verts[j], /*rightward=*/false))
        xs.insert(*x);
    }
  }

  EssentialSegments out;
  out.breakpoints.reserve(xs.size());
  for (const auto& x : xs) out.breakpoints.push_back(terrain.point_at(x));
  const Rational half(1, 2);
  for (std::size_t i = 0; i + 1 < out.breakpoints.size(); ++i) {
    Rational mid = (out.breakpoints[i].x + out.breakpoints[i + 1].x) * half;
    out.representatives.push_back(terrain.point_at(mid));
  }
  return out;
}

ContinuousRun continuous_four_approx(const Terrain& terrain) {
  ContinuousRun run;
  run.segments = essential_segments(terrain);
  const auto& verts = terrain.vertices();
  const std::vector<Rational> unit(verts.size(), Rational(1));
  OneSidedRun inner =
      one_sided_two_approx(terrain, run.segments.representatives, verts, verts, unit, unit);
  run.one_sided_cost = inner.solution.cost;
  run.lp_value = inner.lp_value;

  std::set<Rational> chosen;
  for (const auto& p : inner.solution.picks) chosen.insert(p.guard.x);
  for (const auto& x : chosen) run.solution.picks.push_back(Pick{terrain.point_at(x), Side::Both});
  run.solution.cost = Rational(static_cast<long>(chosen.size()));
  return run;
}

DiscreteRun discrete_guarding(const Terrain& terrain, const std::vector<TerrainPoint>& points,
                              const std::vector<TerrainPoint>& guards,
                              const std::vector<Rational>& weights) {
  const auto w = resolve_weights(weights, guards.size(), "discrete guards");

  DiscreteRun run;
  run.solution.cost = 0;
  run.lp_value = 0;
  run.self_guard_weight = 0;
  run.self_guard_bound = 0;
  if (points.empty()) return run;

  SideMatrices m = side_visibility(terrain, points, guards);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::find(m.both[i].begin(), m.both[i].end(), std::uint8_t(1)) == m.both[i].end())
      throw InfeasibleError(points[i].x.str(),
                            "point x=" + points[i].x.str() + " is seen by no guard");
  }

  std::set<Rational> point_xs;
  for (const auto& p : points) point_xs.insert(p.x);
  bool overlap = false;
  for (const auto& g : guards) overlap = overlap || point_xs.count(g.x) > 0;

  // collapse directed picks to distinct both-ways guards, paying each once
  auto collapse = [&](const std::vector<Pick>& picks, const std::vector<TerrainPoint>& extra) {
    std::set<Rational> xs;
    for (const auto& p : picks) xs.insert(p.guard.x);
    for (const auto& g : extra) xs.insert(g.x);
    Solution s;
    s.cost = 0;
    for (std::size_t j = 0; j < guards.size(); ++j) {
      if (!xs.count(guards[j].x)) continue;
      s.picks.push_back(Pick{guards[j], Side::Both});
      s.cost += w[j];
    }
    return s;
  };

  if (!overlap) {
    OneSidedRun inner = one_sided_two_approx(terrain, points, guards, guards, w, w);
    run.solution = collapse(inner.solution.picks, {});
    run.lp_value = inner.lp_value;
    return run;
  }

  run.overlap_route = true;
  FractionalSolution frac = solve_covering_lp(CoveringLP(m.both, w));
  run.lp_value = frac.objective;
  run.lp_values = frac.values;

  const Rational fifth(1, 5);
  std::vector<std::size_t> a0;
  for (std::size_t j = 0; j < guards.size(); ++j) {
    if (point_xs.count(guards[j].x) && frac.values[j] >= fifth) {
      a0.push_back(j);
      run.self_guards.push_back(guards[j]);
      run.self_guard_weight += w[j];
      run.self_guard_bound += Rational(5) * w[j] * frac.values[j];
    }
  }

  // residual: points unseen by the self-guards, remaining guards, fractional
  // solution scaled by 5/4 and split by which side carries mass >= 1/2
  std::vector<char> in_a0(guards.size(), 0);
  for (std::size_t j : a0) in_a0[j] = 1;

  const Rational half(1, 2);
  const Rational scale(5, 4);
  std::vector<TerrainPoint> rest_guards;
  std::vector<Rational> rest_w, rest_x;
  std::vector<std::size_t> rest_idx;
  for (std::size_t j = 0; j < guards.size(); ++j) {
    if (in_a0[j]) continue;
    rest_guards.push_back(guards[j]);
    rest_w.push_back(w[j]);
    rest_x.push_back(scale * frac.values[j]);
    rest_idx.push_back(j);
  }

  std::vector<TerrainPoint> pts_left, pts_right;
  std::vector<Bitrow> rows_left, rows_right;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool covered = false;
    for (std::size_t j : a0) covered = covered || m.both[i][j];
    if (covered) continue;
    Rational left_mass = 0, right_mass = 0;
    Bitrow lrow(rest_idx.size(), 0), rrow(rest_idx.size(), 0);
    for (std::size_t r = 0; r < rest_idx.size(); ++r) {
      const std::size_t j = rest_idx[r];
      if (m.left[i][j]) {
        lrow[r] = 1;
        left_mass += rest_x[r];
      }
      if (m.right[i][j]) {
        rrow[r] = 1;
        right_mass += rest_x[r];
      }
    }
    const bool to_left = left_mass >= half;
    const bool to_right = right_mass >= half;
    if (!to_left && !to_right)
      throw std::logic_error("scaled residual solution left a point on neither side");
    if (to_left) {
      pts_left.push_back(points[i]);
      rows_left.push_back(std::move(lrow));
    }
    if (to_right) {
      pts_right.push_back(points[i]);
      rows_right.push_back(std::move(rrow));
    }
  }

  Solution a_l = optimal_from_rows(rows_left, pts_left, rest_guards, rest_w, Side::Left);
  Solution a_r = optimal_from_rows(rows_right, pts_right, rest_guards, rest_w, Side::Right);
  std::vector<Pick> directed = a_l.picks;
  directed.insert(directed.end(), a_r.picks.begin(), a_r.picks.end());
  run.solution = collapse(directed, run.self_guards);
  return run;
}

namespace {

struct OracleItem {
  TerrainPoint guard;
  Side dir;
  Rational weight;
};

Solution enumerate_minimum(const Terrain& terrain, const std::vector<TerrainPoint>& points,
                           const std::vector<OracleItem>& items, int cap) {
  if (cap < 0 || cap > 24)
    throw ValidationError("enumeration cap must be between 0 and 24, got " + std::to_string(cap));
  if (static_cast<int>(items.size()) > cap) throw CapExceededError(items.size(), cap);
  Solution out;
  out.cost = 0;
  if (points.empty()) return out;

  const std::size_t k = items.size();
  const std::size_t words = (points.size() + 63) / 64;
  std::vector<std::uint64_t> masks(k * words, 0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      bool cov = false;
      switch (items[j].dir) {
        case Side::Left: cov = items[j].guard.x < points[i].x; break;
        case Side::Right: cov = items[j].guard.x > points[i].x; break;
        case Side::Both: cov = true; break;
      }
      if (cov && terrain.sees(items[j].guard, points[i]))
        masks[j * words + (i / 64)] |= std::uint64_t(1) << (i % 64);
    }
  }

  std::vector<std::uint64_t> full(words, 0);
  for (std::size_t i = 0; i < points.size(); ++i) full[i / 64] |= std::uint64_t(1) << (i % 64);
  std::vector<std::uint64_t> reach(words, 0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t wd = 0; wd < words; ++wd) reach[wd] |= masks[j * words + wd];
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(reach[i / 64] >> (i % 64) & 1))
      throw InfeasibleError(points[i].x.str(),
                            "point x=" + points[i].x.str() + " is covered by no candidate guard");
  }

  const std::size_t total = std::size_t(1) << k;
  std::vector<std::uint64_t> cover(total * words, 0);
  for (std::size_t s = 1; s < total; ++s) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    const std::size_t prev = s & (s - 1);
    for (std::size_t wd = 0; wd < words; ++wd)
      cover[s * words + wd] = cover[prev * words + wd] | masks[low * words + wd];
  }

  auto covers_all = [&](std::size_t s) {
    for (std::size_t wd = 0; wd < words; ++wd)
      if (cover[s * words + wd] != full[wd]) return false;
    return true;
  };

  // Gray-code walk keeps the running weight exact with one add or subtract
  // per visited subset.
  Rational cur = 0;
  Rational best;
  std::size_t best_set = total;  // sentinel: none found yet
  std::size_t gray = 0;
  for (std::size_t i = 1; i < total; ++i) {
    const std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(i));
    gray ^= std::size_t(1) << bit;
    if (gray & (std::size_t(1) << bit)) cur += items[bit].weight;
    else cur -= items[bit].weight;
    if (!covers_all(gray)) continue;
    if (best_set == total || cur < best) {
      best = cur;
      best_set = gray;
    }
  }
  if (best_set == total) throw std::logic_error("full candidate set failed to cover");

  for (std::size_t j = 0; j < k; ++j) {
    if (best_set >> j & 1) {
      out.picks.push_back(Pick{items[j].guard, items[j].dir});
      out.cost += items[j].weight;
    }
  }
  return out;
}

}  // namespace

Solution brute_force_optimum(const GuardingInstance& instance, int cap) {
  const Terrain& t = instance.terrain;
  std::vector<OracleItem> items;

  switch (instance.mode) {
    case Mode::Continuous: {
      EssentialSegments segs = essential_segments(t);
      for (const auto& v : t.vertices()) {
        items.push_back(OracleItem{v, Side::Left, 1});
        items.push_back(OracleItem{v, Side::Right, 1});
      }
      return enumerate_minimum(t, segs.representatives, items, cap);
    }
    case Mode::OneSided: {
      const auto wl = resolve_weights(instance.left_weights, instance.left_guards.size(), "left guards");
      const auto wr =
          resolve_weights(instance.right_weights, instance.right_guards.size(), "right guards");
      for (std::size_t j = 0; j < instance.left_guards.size(); ++j)
        items.push_back(OracleItem{instance.left_guards[j], Side::Left, wl[j]});
      for (std::size_t j = 0; j < instance.right_guards.size(); ++j)
        items.push_back(OracleItem{instance.right_guards[j], Side::Right, wr[j]});
      return enumerate_minimum(t, instance.points, items, cap);
    }
    case Mode::DiscreteBothWays: {
      const auto w =
          resolve_weights(instance.both_weights, instance.both_guards.size(), "discrete guards");
      for (std::size_t j = 0; j < instance.both_guards.size(); ++j)
        items.push_back(OracleItem{instance.both_guards[j], Side::Both, w[j]});
      return enumerate_minimum(t, instance.points, items, cap);
    }
  }
  throw std::logic_error("unreachable");
}

Feasibility verify_feasible(const GuardingInstance& instance, const Solution& solution) {
  const Terrain& t = instance.terrain;
  std::vector<TerrainPoint> required;
  if (instance.mode == Mode::Continuous) {
    EssentialSegments segs = essential_segments(t);
    required = segs.breakpoints;
    required.insert(required.end(), segs.representatives.begin(), segs.representatives.end());
  } else {
    required = instance.points;
  }

  for (const auto& p : required) {
    bool covered = false;
    for (const auto& pick : solution.picks) {
      switch (pick.dir) {
        case Side::Left:
          if (!(pick.guard.x < p.x)) continue;
          break;
        case Side::Right:
          if (!(pick.guard.x > p.x)) continue;
          break;
        case Side::Both:
          break;
      }
      if (t.sees(pick.guard, p)) {
        covered = true;
        break;
      }
    }
    if (!covered) return Feasibility{false, p};
  }
  return Feasibility{true, std::nullopt};
}

}  // namespace terrainguard
