#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "terrainguard/solvers.hpp"

namespace terrainguard {

// Instance files are single JSON documents. All coordinates and weights are
// rational strings ("7/3"), never floats; points on the chain are identified
// by x alone. Duplicate guards are deduplicated (first occurrence wins).
GuardingInstance parse_instance_text(const std::string& json_text);
GuardingInstance load_instance(const std::filesystem::path& path);

// Canonical serialization; parse(serialize(i)) == i and the bytes round-trip.
std::string serialize_instance(const GuardingInstance& instance);
void save_instance(const std::filesystem::path& path, const GuardingInstance& instance);

std::string serialize_solution(const Solution& solution, const std::string& algorithm);
Solution parse_solution_text(const Terrain& terrain, const std::string& json_text);
Solution load_solution(const Terrain& terrain, const std::filesystem::path& path);

// Deterministic RNG. Bounded draws are implemented directly on the engine
// output so streams do not depend on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  // uniform integer in [lo, hi], inclusive
  long range(long lo, long hi);

 private:
  std::mt19937_64 eng_;
};

// Chain with strictly increasing integer x and small integer y; the vertex
// count can shrink below n_vertices when collinear runs normalize away.
Terrain random_terrain(Rng& rng, int n_vertices);

// Distinct on-chain points: midpoints of sub-intervals with endpoints drawn
// uniformly from a grid over the terrain's x-range.
std::vector<TerrainPoint> random_chain_points(Rng& rng, const Terrain& terrain, int count);

struct GenOptions {
  int n_vertices = 6;
  int n_points = 8;
  int n_guards = 5;
  Mode mode = Mode::OneSided;
  bool weighted = false;  // unit weights when false
  int overlap = 0;        // discrete mode: guards placed exactly on points
};

// Deterministic for a fixed (seed, options) pair.
GuardingInstance generate_random(std::uint64_t seed, const GenOptions& options);

}  // namespace terrainguard
