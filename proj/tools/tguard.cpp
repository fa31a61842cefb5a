// tguard: 1.5D terrain guarding instances — generate, solve, verify, render.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "terrainguard/errors.hpp"
#include "terrainguard/instance_io.hpp"
#include "terrainguard/solvers.hpp"
#include "terrainguard/svg.hpp"

using namespace terrainguard;

namespace {

constexpr int kExitInfeasible = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitCheckFailed = 4;

struct Report {
  std::vector<std::pair<std::string, std::string>> fields;
  bool checks_ok = true;

  void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
  void check(const std::string& name, bool ok) {
    fields.emplace_back("check[" + name + "]", ok ? "pass" : "FAIL");
    checks_ok = checks_ok && ok;
  }
  void print(const std::string& format) const {
    for (const auto& [k, v] : fields) {
      if (format == "tsv") std::cout << k << "\t" << v << "\n";
      else std::cout << k << ": " << v << "\n";
    }
  }
};

std::string picks_text(const Solution& s) {
  std::vector<Pick> picks = s.picks;
  std::sort(picks.begin(), picks.end(), [](const Pick& a, const Pick& b) {
    if (a.guard.x != b.guard.x) return a.guard.x < b.guard.x;
    return static_cast<int>(a.dir) < static_cast<int>(b.dir);
  });
  std::string out;
  for (const auto& p : picks) {
    if (!out.empty()) out.push_back(' ');
    out += p.guard.x.str();
    out.push_back(':');
    out += side_name(p.dir);
  }
  return out.empty() ? "-" : out;
}

std::size_t guard_count(const GuardingInstance& inst) {
  return inst.left_guards.size() + inst.right_guards.size() + inst.both_guards.size();
}

std::optional<Solution> try_oracle(const GuardingInstance& inst, int cap) {
  return brute_force_optimum(inst, cap);
}

struct AlgoResult {
  Solution solution;
  std::optional<Rational> lp_value;
  // approximation guarantees to report: (name, multiplier on lp / on oracle)
  std::optional<std::pair<std::string, Rational>> lp_check;
  std::optional<std::pair<std::string, Rational>> oracle_check;
  std::vector<std::pair<std::string, std::string>> extras;
};

AlgoResult run_algorithm(const std::string& algo, const GuardingInstance& inst) {
  AlgoResult r;
  if (algo == "left-greedy") {
    if (inst.mode != Mode::OneSided)
      throw ValidationError("left-greedy needs a one_sided instance");
    GreedyResult g = uniform_left_guarding(inst.terrain, inst.points, inst.left_guards);
    r.solution = g.solution;
    r.oracle_check = {"cost<=oracle", Rational(1)};  // greedy is optimal; equality checked as <=
    r.extras.emplace_back("witnesses", std::to_string(g.witnesses.size()));
  } else if (algo == "one-sided-opt") {
    if (inst.mode != Mode::OneSided)
      throw ValidationError("one-sided-opt needs a one_sided instance");
    const bool left = !inst.left_guards.empty();
    if (left && !inst.right_guards.empty())
      throw ValidationError("one-sided-opt needs a pure left or pure right instance");
    r.solution = left ? weighted_one_sided_optimal(inst.terrain, inst.points, inst.left_guards,
                                                   Side::Left, inst.left_weights)
                      : weighted_one_sided_optimal(inst.terrain, inst.points, inst.right_guards,
                                                   Side::Right, inst.right_weights);
    r.lp_value = r.solution.cost;  // the LP optimum is integral and is the solution
    r.oracle_check = {"cost<=oracle", Rational(1)};
  } else if (algo == "one-sided-2approx") {
    if (inst.mode != Mode::OneSided)
      throw ValidationError("one-sided-2approx needs a one_sided instance");
    OneSidedRun run = one_sided_two_approx(inst.terrain, inst.points, inst.left_guards,
                                           inst.right_guards, inst.left_weights,
                                           inst.right_weights);
    r.solution = run.solution;
    r.lp_value = run.lp_value;
    r.lp_check = {"cost<=2*lp", Rational(2)};
    r.oracle_check = {"cost<=2*oracle", Rational(2)};
  } else if (algo == "continuous-4approx") {
    if (inst.mode != Mode::Continuous)
      throw ValidationError("continuous-4approx needs a continuous instance");
    ContinuousRun run = continuous_four_approx(inst.terrain);
    r.solution = run.solution;
    r.lp_value = run.lp_value;
    r.extras.emplace_back("one_sided_cost", run.one_sided_cost.str());
    r.extras.emplace_back("breakpoints", std::to_string(run.segments.breakpoints.size()));
    r.extras.emplace_back("segments", std::to_string(run.segments.representatives.size()));
    r.lp_check = {"cost<=2*lp", Rational(2)};
    r.oracle_check = {"cost<=2*oracle", Rational(2)};
  } else if (algo == "discrete") {
    if (inst.mode != Mode::DiscreteBothWays)
      throw ValidationError("discrete needs a discrete_both_ways instance");
    DiscreteRun run = discrete_guarding(inst.terrain, inst.points, inst.both_guards,
                                        inst.both_weights);
    r.solution = run.solution;
    r.lp_value = run.lp_value;
    r.extras.emplace_back("route", run.overlap_route ? "overlap" : "disjoint");
    if (run.overlap_route) {
      r.extras.emplace_back("self_guards", std::to_string(run.self_guards.size()));
      r.extras.emplace_back("self_guard_weight", run.self_guard_weight.str());
      r.extras.emplace_back("self_guard_bound", run.self_guard_bound.str());
      r.lp_check = {"cost<=5*lp", Rational(5)};
      r.oracle_check = {"cost<=5*oracle", Rational(5)};
    } else {
      r.lp_check = {"cost<=2*lp", Rational(2)};
      r.oracle_check = {"cost<=4*oracle", Rational(4)};
    }
  } else {
    throw ValidationError("unknown algorithm '" + algo + "'");
  }
  return r;
}

int cmd_solve(const std::string& path, const std::string& algo, bool with_oracle, int cap,
              const std::string& out, const std::string& format) {
  GuardingInstance inst = load_instance(path);
  AlgoResult r = run_algorithm(algo, inst);

  Report rep;
  rep.add("algorithm", algo);
  rep.add("instance", path);
  rep.add("n", std::to_string(inst.terrain.vertex_count()));
  rep.add("points", std::to_string(inst.points.size()));
  rep.add("guards", std::to_string(guard_count(inst)));
  rep.add("cost", r.solution.cost.str());
  rep.add("picks", picks_text(r.solution));
  if (r.lp_value) rep.add("lp", r.lp_value->str());
  for (const auto& [k, v] : r.extras) rep.add(k, v);

  Feasibility feas = verify_feasible(inst, r.solution);
  rep.check("feasible", feas.ok);
  if (r.lp_value && r.lp_check)
    rep.check(r.lp_check->first, r.solution.cost <= r.lp_check->second * *r.lp_value);
  if (with_oracle) {
    Solution oracle = brute_force_optimum(inst, cap);
    rep.add("oracle", oracle.cost.str());
    if (r.oracle_check)
      rep.check(r.oracle_check->first, r.solution.cost <= r.oracle_check->second * oracle.cost);
  }
  rep.print(format);

  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw ValidationError("cannot write " + out);
    f << serialize_solution(r.solution, algo);
  }
  return rep.checks_ok ? 0 : kExitCheckFailed;
}

int cmd_oracle(const std::string& path, int cap, const std::string& out,
               const std::string& format) {
  GuardingInstance inst = load_instance(path);
  Solution sol = brute_force_optimum(inst, cap);
  Report rep;
  rep.add("algorithm", "oracle");
  rep.add("instance", path);
  rep.add("cost", sol.cost.str());
  rep.add("picks", picks_text(sol));
  rep.print(format);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw ValidationError("cannot write " + out);
    f << serialize_solution(sol, "oracle");
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& solution_path,
               const std::string& format) {
  GuardingInstance inst = load_instance(path);
  Solution sol = load_solution(inst.terrain, solution_path);
  Feasibility feas = verify_feasible(inst, sol);
  Report rep;
  rep.add("instance", path);
  rep.add("solution", solution_path);
  rep.add("feasible", feas.ok ? "yes" : "no");
  if (!feas.ok) rep.add("uncovered", feas.uncovered->x.str());
  rep.print(format);
  return feas.ok ? 0 : kExitInfeasible;
}

int cmd_gen(std::uint64_t seed, const GenOptions& opt, const std::string& out) {
  GuardingInstance inst = generate_random(seed, opt);
  if (out.empty()) {
    std::cout << serialize_instance(inst);
  } else {
    save_instance(out, inst);
  }
  return 0;
}

int cmd_render(const std::string& path, const std::string& solution_path, const std::string& out) {
  GuardingInstance inst = load_instance(path);
  std::optional<Solution> sol;
  if (!solution_path.empty()) sol = load_solution(inst.terrain, solution_path);
  const std::string svg = render_svg(inst, sol ? &*sol : nullptr);
  if (out.empty()) {
    std::cout << svg;
  } else {
    std::ofstream f(out);
    if (!f) throw ValidationError("cannot write " + out);
    f << svg;
  }
  return 0;
}

int cmd_bench(const std::string& algo, std::uint64_t seed0, int count, GenOptions opt,
              bool with_oracle, int cap, const std::string& format) {
  if (algo == "continuous-4approx") opt.mode = Mode::Continuous;
  else if (algo == "discrete") opt.mode = Mode::DiscreteBothWays;
  else opt.mode = Mode::OneSided;

  // the pure-left algorithms get pure-left instances
  const bool left_only = algo == "left-greedy" || algo == "one-sided-opt";

  const char* sep = format == "tsv" ? "\t" : "  ";
  std::cout << "seed" << sep << "n" << sep << "N" << sep << "G" << sep << "cost" << sep << "lp"
            << sep << "oracle" << sep << "ratio" << "\n";
  bool all_ok = true;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = seed0 + static_cast<std::uint64_t>(i);
    GuardingInstance inst = generate_random(seed, opt);
    if (left_only) {
      inst.left_guards.insert(inst.left_guards.end(), inst.right_guards.begin(),
                              inst.right_guards.end());
      inst.left_weights.insert(inst.left_weights.end(), inst.right_weights.begin(),
                               inst.right_weights.end());
      if (inst.left_weights.size() != inst.left_guards.size()) inst.left_weights.clear();
      inst.right_guards.clear();
      inst.right_weights.clear();
    }
    std::string cost = "-", lp = "-", oracle = "-", ratio = "-";
    try {
      AlgoResult r = run_algorithm(algo, inst);
      cost = r.solution.cost.str();
      if (r.lp_value) lp = r.lp_value->str();
      all_ok = all_ok && verify_feasible(inst, r.solution).ok;
      if (r.lp_value && r.lp_check)
        all_ok = all_ok && r.solution.cost <= r.lp_check->second * *r.lp_value;
      Rational low;
      bool have_low = false;
      if (with_oracle) {
        Solution best = brute_force_optimum(inst, cap);
        oracle = best.cost.str();
        if (r.oracle_check)
          all_ok = all_ok && r.solution.cost <= r.oracle_check->second * best.cost;
        if (best.cost.sign() > 0) {
          low = best.cost;
          have_low = true;
        }
      } else if (r.lp_value && r.lp_value->sign() > 0) {
        low = *r.lp_value;
        have_low = true;
      }
      if (have_low) ratio = (r.solution.cost / low).str();
    } catch (const InfeasibleError&) {
      cost = "-";
    }
    std::cout << seed << sep << inst.terrain.vertex_count() << sep << inst.points.size() << sep
              << guard_count(inst) << sep << cost << sep << lp << sep << oracle << sep << ratio
              << "\n";
  }
  return all_ok ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1.5D terrain guarding: exact geometry, covering LPs and approximation algorithms"};
  app.require_subcommand(1);
  app.fallthrough();  // parent options may follow the subcommand

  std::string format = "text";
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "tsv"}));

  // solve
  auto* solve = app.add_subcommand("solve", "run an algorithm on an instance file");
  std::string solve_path, solve_algo, solve_out;
  bool solve_oracle = false;
  int solve_cap = kDefaultOracleCap;
  solve->add_option("instance", solve_path, "instance JSON file")->required();
  solve->add_option("--algo", solve_algo, "algorithm")
      ->required()
      ->check(CLI::IsMember({"left-greedy", "one-sided-opt", "one-sided-2approx",
                             "continuous-4approx", "discrete"}));
  solve->add_flag("--with-oracle", solve_oracle, "also run the brute-force oracle");
  solve->add_option("--cap", solve_cap, "oracle enumeration cap");
  solve->add_option("--out", solve_out, "write the solution JSON here");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exact optimum by subset enumeration");
  std::string oracle_path, oracle_out;
  int oracle_cap = kDefaultOracleCap;
  oracle->add_option("instance", oracle_path, "instance JSON file")->required();
  oracle->add_option("--cap", oracle_cap, "enumeration cap");
  oracle->add_option("--out", oracle_out, "write the solution JSON here");

  // verify
  auto* verify = app.add_subcommand("verify", "check a solution file against an instance");
  std::string verify_path, verify_solution;
  verify->add_option("instance", verify_path, "instance JSON file")->required();
  verify->add_option("solution", verify_solution, "solution JSON file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::uint64_t gen_seed = 0;
  GenOptions gen_opt;
  std::string gen_mode = "one_sided", gen_out;
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--vertices", gen_opt.n_vertices, "terrain vertices");
  gen->add_option("--points", gen_opt.n_points, "points to guard");
  gen->add_option("--guards", gen_opt.n_guards, "candidate guards");
  gen->add_option("--mode", gen_mode, "instance mode")
      ->check(CLI::IsMember({"one_sided", "discrete_both_ways", "discrete", "continuous"}));
  gen->add_flag("--weighted", gen_opt.weighted, "random rational weights");
  gen->add_option("--overlap", gen_opt.overlap, "guards co-located with points (discrete)");
  gen->add_option("--out", gen_out, "output file (stdout if omitted)");

  // render
  auto* render = app.add_subcommand("render", "draw an instance (and a solution) as SVG");
  std::string render_path, render_solution, render_out;
  render->add_option("instance", render_path, "instance JSON file")->required();
  render->add_option("--solution", render_solution, "solution JSON file");
  render->add_option("--out", render_out, "output SVG file (stdout if omitted)");

  // bench
  auto* bench = app.add_subcommand("bench", "run a seeded batch and print one line per instance");
  std::string bench_algo = "one-sided-2approx";
  std::uint64_t bench_seed = 0;
  int bench_count = 20, bench_cap = kDefaultOracleCap;
  bool bench_oracle = false;
  GenOptions bench_opt;
  bench->add_option("--algo", bench_algo, "algorithm")
      ->check(CLI::IsMember({"left-greedy", "one-sided-opt", "one-sided-2approx",
                             "continuous-4approx", "discrete"}));
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_option("--count", bench_count, "batch size");
  bench->add_option("--vertices", bench_opt.n_vertices, "terrain vertices");
  bench->add_option("--points", bench_opt.n_points, "points to guard");
  bench->add_option("--guards", bench_opt.n_guards, "candidate guards");
  bench->add_flag("--weighted", bench_opt.weighted, "random rational weights");
  bench->add_option("--overlap", bench_opt.overlap, "guards co-located with points (discrete)");
  bench->add_flag("--with-oracle", bench_oracle, "compare against the brute-force oracle");
  bench->add_option("--cap", bench_cap, "oracle enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitBadInput;
  }

  try {
    if (*solve) return cmd_solve(solve_path, solve_algo, solve_oracle, solve_cap, solve_out, format);
    if (*oracle) return cmd_oracle(oracle_path, oracle_cap, oracle_out, format);
    if (*verify) return cmd_verify(verify_path, verify_solution, format);
    if (*gen) {
      gen_opt.mode = mode_from_name(gen_mode);
      return cmd_gen(gen_seed, gen_opt, gen_out);
    }
    if (*render) return cmd_render(render_path, render_solution, render_out);
    if (*bench) return cmd_bench(bench_algo, bench_seed, bench_count, bench_opt, bench_oracle,
                                 bench_cap, format);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
