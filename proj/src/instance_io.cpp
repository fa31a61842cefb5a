#include "terrainguard/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "terrainguard/errors.hpp"

namespace terrainguard {

using json = nlohmann::ordered_json;

namespace {

Rational parse_field(const std::string& text, const std::string& where) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

std::vector<std::string> string_list(const json& j, const std::string& key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  const json& arr = j.at(key);
  if (!arr.is_array()) throw ParseError("field '" + key + "' must be an array");
  for (const auto& e : arr) {
    if (!e.is_string()) throw ParseError("field '" + key + "' must hold rational strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

// x strings -> on-chain points, validated against the terrain range
std::vector<TerrainPoint> lift_points(const Terrain& t, const std::vector<std::string>& xs,
                                      const std::string& key) {
  std::vector<TerrainPoint> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Rational x = parse_field(xs[i], key + "[" + std::to_string(i) + "]");
    try {
      out.push_back(t.point_at(x));
    } catch (const ValidationError& e) {
      throw ValidationError(key + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

std::vector<Rational> lift_weights(const std::vector<std::string>& ws, std::size_t n_guards,
                                   const std::string& key) {
  std::vector<Rational> out;
  if (ws.empty()) return out;
  if (ws.size() != n_guards)
    throw ValidationError(key + ": " + std::to_string(ws.size()) + " weights for " +
                          std::to_string(n_guards) + " guards");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    Rational w = parse_field(ws[i], key + "[" + std::to_string(i) + "]");
    if (w.sign() <= 0)
      throw ValidationError(key + "[" + std::to_string(i) + "]: weights must be positive, got " +
                            w.str());
    out.push_back(std::move(w));
  }
  return out;
}

// drop repeated x values, keeping the first occurrence and its weight
void dedup_guards(std::vector<TerrainPoint>& guards, std::vector<Rational>& weights) {
  std::set<Rational> seen;
  std::vector<TerrainPoint> g;
  std::vector<Rational> w;
  for (std::size_t i = 0; i < guards.size(); ++i) {
    if (!seen.insert(guards[i].x).second) continue;
    g.push_back(guards[i]);
    if (!weights.empty()) w.push_back(weights[i]);
  }
  guards = std::move(g);
  weights = std::move(w);
}

void dedup_points(std::vector<TerrainPoint>& points) {
  std::set<Rational> seen;
  std::vector<TerrainPoint> out;
  for (const auto& p : points)
    if (seen.insert(p.x).second) out.push_back(p);
  points = std::move(out);
}

json x_array(const std::vector<TerrainPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(p.x.str());
  return arr;
}

json weight_array(const std::vector<Rational>& ws) {
  json arr = json::array();
  for (const auto& w : ws) arr.push_back(w.str());
  return arr;
}

GuardingInstance parse_instance_json(const json& j);

}  // namespace

GuardingInstance parse_instance_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance JSON must be an object");
  if (!j.contains("terrain")) throw ParseError("instance JSON missing 'terrain'");

  try {
    return parse_instance_json(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
}

namespace {

GuardingInstance parse_instance_json(const json& j) {
  GuardingInstance inst;
  inst.mode = mode_from_name(j.value("mode", std::string("one_sided")));

  const json& tv = j.at("terrain");
  if (!tv.is_array()) throw ParseError("'terrain' must be an array of [x, y] pairs");
  std::vector<std::pair<Rational, Rational>> verts;
  for (std::size_t i = 0; i < tv.size(); ++i) {
    const json& v = tv[i];
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      throw ParseError("terrain[" + std::to_string(i) + "] must be [\"x\", \"y\"]");
    verts.emplace_back(parse_field(v[0].get<std::string>(), "terrain[" + std::to_string(i) + "].x"),
                       parse_field(v[1].get<std::string>(), "terrain[" + std::to_string(i) + "].y"));
  }
  inst.terrain = Terrain::make(verts);

  inst.points = lift_points(inst.terrain, string_list(j, "points"), "points");
  dedup_points(inst.points);
  inst.left_guards = lift_points(inst.terrain, string_list(j, "left_guards"), "left_guards");
  inst.right_guards = lift_points(inst.terrain, string_list(j, "right_guards"), "right_guards");
  inst.both_guards = lift_points(inst.terrain, string_list(j, "both_guards"), "both_guards");
  inst.left_weights = lift_weights(string_list(j, "left_weights"), inst.left_guards.size(), "left_weights");
  inst.right_weights =
      lift_weights(string_list(j, "right_weights"), inst.right_guards.size(), "right_weights");
  inst.both_weights =
      lift_weights(string_list(j, "both_weights"), inst.both_guards.size(), "both_weights");
  dedup_guards(inst.left_guards, inst.left_weights);
  dedup_guards(inst.right_guards, inst.right_weights);
  dedup_guards(inst.both_guards, inst.both_weights);

  switch (inst.mode) {
    case Mode::OneSided:
      if (!inst.both_guards.empty())
        throw ValidationError("one_sided instances take left_guards/right_guards, not both_guards");
      break;
    case Mode::DiscreteBothWays:
      if (!inst.left_guards.empty() || !inst.right_guards.empty())
        throw ValidationError("discrete instances take both_guards only");
      break;
    case Mode::Continuous:
      if (!inst.points.empty() || !inst.left_guards.empty() || !inst.right_guards.empty() ||
          !inst.both_guards.empty())
        throw ValidationError("continuous instances carry only a terrain");
      break;
  }
  return inst;
}

}  // namespace

GuardingInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance_text(ss.str());
}

std::string serialize_instance(const GuardingInstance& inst) {
  json j;
  j["mode"] = mode_name(inst.mode);
  json tv = json::array();
  for (const auto& v : inst.terrain.vertices()) tv.push_back(json::array({v.x.str(), v.y.str()}));
  j["terrain"] = tv;
  j["points"] = x_array(inst.points);
  j["left_guards"] = x_array(inst.left_guards);
  j["right_guards"] = x_array(inst.right_guards);
  j["both_guards"] = x_array(inst.both_guards);
  if (!inst.left_weights.empty()) j["left_weights"] = weight_array(inst.left_weights);
  if (!inst.right_weights.empty()) j["right_weights"] = weight_array(inst.right_weights);
  if (!inst.both_weights.empty()) j["both_weights"] = weight_array(inst.both_weights);
  return j.dump(2) + "\n";
}

void save_instance(const std::filesystem::path& path, const GuardingInstance& instance) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write instance file " + path.string());
  out << serialize_instance(instance);
}

std::string serialize_solution(const Solution& solution, const std::string& algorithm) {
  json j;
  j["algorithm"] = algorithm;
  j["cost"] = solution.cost.str();
  json picks = json::array();
  for (const auto& p : solution.picks) {
    json e;
    e["x"] = p.guard.x.str();
    e["dir"] = side_name(p.dir);
    picks.push_back(e);
  }
  j["picks"] = picks;
  return j.dump(2) + "\n";
}

Solution parse_solution_text(const Terrain& terrain, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("picks") || !j.at("picks").is_array())
    throw ParseError("solution JSON must be an object with a 'picks' array");
  try {
    Solution s;
    s.cost = j.contains("cost") ? parse_field(j.at("cost").get<std::string>(), "cost") : Rational(0);
    for (std::size_t i = 0; i < j.at("picks").size(); ++i) {
      const json& e = j.at("picks")[i];
      if (!e.is_object() || !e.contains("x") || !e.contains("dir"))
        throw ParseError("picks[" + std::to_string(i) + "] must be {\"x\", \"dir\"}");
      Rational x = parse_field(e.at("x").get<std::string>(), "picks[" + std::to_string(i) + "].x");
      // parse the direction before building the pick: g++ 11 fails to unwind
      // partially initialized aggregates (PR 66139), leaking the point
      const Side dir = side_from_name(e.at("dir").get<std::string>());
      s.picks.push_back(Pick{terrain.point_at(x), dir});
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("solution JSON: ") + e.what());
  }
}

Solution load_solution(const Terrain& terrain, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open solution file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_solution_text(terrain, ss.str());
}

long Rng::range(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(eng_() % span);
}

Terrain random_terrain(Rng& rng, int n_vertices) {
  if (n_vertices < 2) n_vertices = 2;
  std::vector<std::pair<Rational, Rational>> verts;
  long x = 0;
  long prev_y = -1;
  for (int i = 0; i < n_vertices; ++i) {
    long y = rng.range(0, 8);
    if (y == prev_y) y = (y + 1) % 9;  // avoid flat runs that normalize away
    verts.emplace_back(Rational(x), Rational(y));
    prev_y = y;
    x += rng.range(1, 3);
  }
  return Terrain::make(verts);
}

std::vector<TerrainPoint> random_chain_points(Rng& rng, const Terrain& terrain, int count) {
  const Rational lo = terrain.x_min();
  const Rational span = terrain.x_max() - terrain.x_min();
  const long grid = 4L * std::max(count, 1) + 8;
  std::set<Rational> xs;
  int attempts = 0;
  while (static_cast<int>(xs.size()) < count && attempts < 64 * count + 256) {
    ++attempts;
    long u = rng.range(0, grid);
    long v = rng.range(0, grid);
    if (u == v) continue;
    // midpoint of the sub-interval [min(u,v), max(u,v)] on the grid
    Rational f(u + v, 2 * grid);
    xs.insert(lo + span * f);
  }
  std::vector<TerrainPoint> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(terrain.point_at(x));
  return out;
}

GuardingInstance generate_random(std::uint64_t seed, const GenOptions& options) {
  if (options.n_vertices < 1 || options.n_points < 1 || options.n_guards < 1)
    throw ValidationError("generator sizes must be >= 1");
  Rng rng(seed);
  GuardingInstance inst;
  inst.mode = options.mode;
  inst.terrain = random_terrain(rng, options.n_vertices);
  if (options.mode == Mode::Continuous) return inst;

  inst.points = random_chain_points(rng, inst.terrain, options.n_points);
  std::vector<TerrainPoint> guards = random_chain_points(rng, inst.terrain, options.n_guards);

  auto weight = [&]() -> Rational { return Rational(rng.range(1, 12), rng.range(1, 4)); };

  if (options.mode == Mode::OneSided) {
    for (const auto& g : guards) {
      if (rng.range(0, 1) == 0) {
        inst.left_guards.push_back(g);
        if (options.weighted) inst.left_weights.push_back(weight());
      } else {
        inst.right_guards.push_back(g);
        if (options.weighted) inst.right_weights.push_back(weight());
      }
    }
    return inst;
  }

  // discrete: optionally co-locate some guards with points
  std::set<Rational> guard_xs;
  for (const auto& g : guards) guard_xs.insert(g.x);
  int planted = 0;
  for (const auto& p : inst.points) {
    if (planted >= options.overlap) break;
    if (guard_xs.insert(p.x).second) {
      guards.push_back(p);
      ++planted;
    }
  }
  std::sort(guards.begin(), guards.end());
  inst.both_guards = std::move(guards);
  if (options.weighted)
    for (std::size_t i = 0; i < inst.both_guards.size(); ++i) inst.both_weights.push_back(weight());
  return inst;
}

}  // namespace terrainguard
