#pragma once

#include <optional>
#include <string>
#include <vector>

#include "terrainguard/lp.hpp"
#include "terrainguard/visibility.hpp"

namespace terrainguard {

enum class Mode { OneSided, DiscreteBothWays, Continuous };

const char* mode_name(Mode m);
Mode mode_from_name(const std::string& name);

struct Pick {
  TerrainPoint guard;
  Side dir = Side::Both;
};

// A set of (guard, direction) picks. cost sums the weight of every pick, so a
// guard chosen in two directions pays twice.
struct Solution {
  std::vector<Pick> picks;
  Rational cost;
};

struct GuardingInstance {
  Terrain terrain;
  Mode mode = Mode::OneSided;
  std::vector<TerrainPoint> points;  // N; empty in continuous mode
  std::vector<TerrainPoint> left_guards;   // G_L (one-sided mode)
  std::vector<TerrainPoint> right_guards;  // G_R (one-sided mode)
  std::vector<TerrainPoint> both_guards;   // G (discrete mode)
  // positive weights, parallel to the guard lists; empty means unit weights
  std::vector<Rational> left_weights;
  std::vector<Rational> right_weights;
  std::vector<Rational> both_weights;
};

// The minimum-x guard strictly left of p that sees it; ties between guards at
// equal x resolve to the first in input order.
std::optional<TerrainPoint> leftmost_seer(const Terrain& terrain, const TerrainPoint& p,
                                          const std::vector<TerrainPoint>& guards);

struct GreedyResult {
  Solution solution;       // picks all carry Side::Left; cost = cardinality
  std::vector<TerrainPoint> witnesses;  // points that forced an addition; no
                                        // guard sees two of them from the left
};

// Scan points left to right, adding the leftmost seer of each point not yet
// covered. Optimal for unit weights. Throws InfeasibleError if some point has
// no guard strictly to its left seeing it.
GreedyResult uniform_left_guarding(const Terrain& terrain, const std::vector<TerrainPoint>& points,
                                   const std::vector<TerrainPoint>& guards);

// Optimal weighted left- (or right-) guarding via the covering LP: the
// incidence matrix sorts into greedy standard form, so a basic optimal
// solution is 0/1 and can be read off directly. `side` must be Left or Right.
Solution weighted_one_sided_optimal(const Terrain& terrain, const std::vector<TerrainPoint>& points,
                                    const std::vector<TerrainPoint>& guards, Side side,
                                    const std::vector<Rational>& weights);

struct OneSidedRun {
  Solution solution;
  Rational lp_value;  // optimal fractional value of the one-sided covering LP
  // the point split induced by the fractional solution (a point may be in
  // both halves when each side carries mass >= 1/2)
  std::vector<std::uint8_t> in_left;
  std::vector<std::uint8_t> in_right;
};

// LP-rounding 2-approximation for one-sided guarding: solve the fractional
// relaxation, split points by which side carries mass >= 1/2, then solve each
// side optimally. cost <= 2 * lp_value.
OneSidedRun one_sided_two_approx(const Terrain& terrain, const std::vector<TerrainPoint>& points,
                                 const std::vector<TerrainPoint>& left_guards,
                                 const std::vector<TerrainPoint>& right_guards,
                                 const std::vector<Rational>& left_weights,
                                 const std::vector<Rational>& right_weights);

struct EssentialSegments {
  // sorted by x; includes every vertex plus the points where a line through a
  // mutually visible vertex pair re-intersects the chain
  std::vector<TerrainPoint> breakpoints;
  // one point strictly inside each segment (the midpoint); any vertex sees
  // either all of a segment or none of it
  std::vector<TerrainPoint> representatives;
};

EssentialSegments essential_segments(const Terrain& terrain);

struct ContinuousRun {
  Solution solution;        // distinct vertex guards, direction Both
  Rational one_sided_cost;  // directed cost of the underlying one-sided solve
  Rational lp_value;        // fractional value of the discretized instance
  EssentialSegments segments;
};

// Guard the whole chain with vertex guards: discretize into essential
// segments, solve one-sided guarding of the representatives with all vertices
// available on both sides, and collapse the picks to vertices.
ContinuousRun continuous_four_approx(const Terrain& terrain);

struct DiscreteRun {
  Solution solution;  // picks with direction Both, each distinct guard paid once
  Rational lp_value;  // one-sided LP value (disjoint route) or full LP value (overlap route)
  bool overlap_route = false;
  // overlap route only: the fractional solution (parallel to the guard list),
  // the self-guard set and its exact charging bound
  std::vector<Rational> lp_values;
  std::vector<TerrainPoint> self_guards;      // A_0
  Rational self_guard_weight;                 // w(A_0)
  Rational self_guard_bound;                  // 5 * sum_{g in A_0} w_g x*_g
};

// Discrete guarding with both-ways guards. When no guard coincides with a
// point, reduce to one-sided guarding (factor 4). Otherwise solve the full
// covering LP, self-guard the points with fractional mass >= 1/5 on
// themselves, scale the remaining solution by 5/4 and hand it to the
// one-sided split (factor 5).
DiscreteRun discrete_guarding(const Terrain& terrain, const std::vector<TerrainPoint>& points,
                              const std::vector<TerrainPoint>& guards,
                              const std::vector<Rational>& weights);

inline constexpr int kDefaultOracleCap = 16;

// Exact minimum-weight solution by subset enumeration over the instance's
// (guard, direction) ground set. Continuous instances are discretized to
// their essential-segment representatives with vertex guards on both sides.
// Throws CapExceededError if the ground set exceeds `cap`.
Solution brute_force_optimum(const GuardingInstance& instance, int cap = kDefaultOracleCap);

struct Feasibility {
  bool ok = false;
  std::optional<TerrainPoint> uncovered;  // certificate when !ok
};

// Checks that every required point is covered by some pick under direction
// strictness. Continuous instances require every breakpoint and every
// representative to be covered.
Feasibility verify_feasible(const GuardingInstance& instance, const Solution& solution);

}  // namespace terrainguard
