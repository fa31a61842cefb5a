// Python bindings. Rationals cross the boundary as canonical strings
// ("7/3"), so nothing is ever rounded on the way in or out.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "terrainguard/errors.hpp"
#include "terrainguard/instance_io.hpp"
#include "terrainguard/lp.hpp"
#include "terrainguard/solvers.hpp"
#include "terrainguard/svg.hpp"
#include "terrainguard/visibility.hpp"

namespace py = pybind11;
using namespace terrainguard;

namespace {

std::vector<Rational> to_rationals(const std::optional<std::vector<std::string>>& v) {
  std::vector<Rational> out;
  if (!v) return out;
  out.reserve(v->size());
  for (const auto& s : *v) out.push_back(Rational::parse(s));
  return out;
}

std::vector<TerrainPoint> to_points(const Terrain& t, const std::vector<std::string>& xs) {
  std::vector<TerrainPoint> out;
  out.reserve(xs.size());
  for (const auto& s : xs) out.push_back(t.point_at(Rational::parse(s)));
  return out;
}

std::vector<std::string> from_points(const std::vector<TerrainPoint>& pts) {
  std::vector<std::string> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.x.str());
  return out;
}

std::vector<std::string> from_rationals(const std::vector<Rational>& rs) {
  std::vector<std::string> out;
  out.reserve(rs.size());
  for (const auto& r : rs) out.push_back(r.str());
  return out;
}

std::vector<std::vector<std::uint8_t>> to_binary(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::uint8_t> r;
    r.reserve(row.size());
    for (int e : row) r.push_back(e ? 1 : 0);
    out.push_back(std::move(r));
  }
  return out;
}

GuardSpec to_spec(const Terrain& t, const std::pair<std::string, std::string>& g) {
  const Side side = side_from_name(g.second);  // may throw; keep out of the aggregate init
  return GuardSpec{t.point_at(Rational::parse(g.first)), side};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact 1.5D terrain guarding: visibility, covering LPs and approximation algorithms";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  py::class_<TerrainPoint>(m, "TerrainPoint")
      .def_property_readonly("x", [](const TerrainPoint& p) { return p.x.str(); })
      .def_property_readonly("y", [](const TerrainPoint& p) { return p.y.str(); })
      .def("__repr__", [](const TerrainPoint& p) {
        return "TerrainPoint(x=" + p.x.str() + ", y=" + p.y.str() + ")";
      });

  py::class_<Terrain>(m, "Terrain")
      .def(py::init([](const std::vector<std::pair<std::string, std::string>>& vertices) {
             std::vector<std::pair<Rational, Rational>> vs;
             vs.reserve(vertices.size());
             for (const auto& [x, y] : vertices)
               vs.emplace_back(Rational::parse(x), Rational::parse(y));
             return Terrain::make(vs);
           }),
           py::arg("vertices"), "Build a terrain from [(x, y), ...] rational strings.")
      .def("vertices",
           [](const Terrain& t) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& v : t.vertices()) out.emplace_back(v.x.str(), v.y.str());
             return out;
           })
      .def("vertex_count", &Terrain::vertex_count)
      .def("x_min", [](const Terrain& t) { return t.x_min().str(); })
      .def("x_max", [](const Terrain& t) { return t.x_max().str(); })
      .def("point_at",
           [](const Terrain& t, const std::string& x) { return t.point_at(Rational::parse(x)); },
           py::arg("x"))
      .def("sees",
           [](const Terrain& t, const std::string& p, const std::string& q) {
             return t.sees(t.point_at(Rational::parse(p)), t.point_at(Rational::parse(q)));
           },
           py::arg("p"), py::arg("q"),
           "Visibility between the chain points at the two abscissas.")
      .def("__repr__", [](const Terrain& t) {
        return "Terrain(" + std::to_string(t.vertex_count()) + " vertices, x in [" +
               t.x_min().str() + ", " + t.x_max().str() + "])";
      });

  py::class_<Solution>(m, "Solution")
      .def_property_readonly("cost", [](const Solution& s) { return s.cost.str(); })
      .def_property_readonly("picks",
                             [](const Solution& s) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const auto& p : s.picks)
                                 out.emplace_back(p.guard.x.str(), side_name(p.dir));
                               return out;
                             })
      .def("__repr__", [](const Solution& s) {
        return "Solution(cost=" + s.cost.str() + ", picks=" + std::to_string(s.picks.size()) + ")";
      });

  py::class_<GuardingInstance>(m, "GuardingInstance")
      .def_property_readonly("mode",
                             [](const GuardingInstance& i) { return std::string(mode_name(i.mode)); })
      .def_property_readonly("terrain", [](const GuardingInstance& i) { return i.terrain; })
      .def_property_readonly("points", [](const GuardingInstance& i) { return from_points(i.points); })
      .def_property_readonly("left_guards",
                             [](const GuardingInstance& i) { return from_points(i.left_guards); })
      .def_property_readonly("right_guards",
                             [](const GuardingInstance& i) { return from_points(i.right_guards); })
      .def_property_readonly("both_guards",
                             [](const GuardingInstance& i) { return from_points(i.both_guards); })
      .def_property_readonly("left_weights",
                             [](const GuardingInstance& i) { return from_rationals(i.left_weights); })
      .def_property_readonly("right_weights",
                             [](const GuardingInstance& i) { return from_rationals(i.right_weights); })
      .def_property_readonly("both_weights",
                             [](const GuardingInstance& i) { return from_rationals(i.both_weights); })
      .def("__repr__", [](const GuardingInstance& i) {
        return "GuardingInstance(mode=" + std::string(mode_name(i.mode)) + ", points=" +
               std::to_string(i.points.size()) + ")";
      });

  m.def(
      "make_instance",
      [](const Terrain& terrain, const std::string& mode, const std::vector<std::string>& points,
         const std::vector<std::string>& left_guards, const std::vector<std::string>& right_guards,
         const std::vector<std::string>& both_guards,
         const std::optional<std::vector<std::string>>& left_weights,
         const std::optional<std::vector<std::string>>& right_weights,
         const std::optional<std::vector<std::string>>& both_weights) {
        GuardingInstance inst;
        inst.terrain = terrain;
        inst.mode = mode_from_name(mode);
        inst.points = to_points(terrain, points);
        inst.left_guards = to_points(terrain, left_guards);
        inst.right_guards = to_points(terrain, right_guards);
        inst.both_guards = to_points(terrain, both_guards);
        inst.left_weights = to_rationals(left_weights);
        inst.right_weights = to_rationals(right_weights);
        inst.both_weights = to_rationals(both_weights);
        return inst;
      },
      py::arg("terrain"), py::arg("mode") = "one_sided",
      py::arg("points") = std::vector<std::string>{},
      py::arg("left_guards") = std::vector<std::string>{},
      py::arg("right_guards") = std::vector<std::string>{},
      py::arg("both_guards") = std::vector<std::string>{}, py::arg("left_weights") = py::none(),
      py::arg("right_weights") = py::none(), py::arg("both_weights") = py::none());

  // visibility structure
  py::class_<PointVisibility>(m, "PointVisibility")
      .def_readonly("all", &PointVisibility::all)
      .def_readonly("left", &PointVisibility::left)
      .def_readonly("right", &PointVisibility::right);

  m.def(
      "visibility_sets",
      [](const Terrain& t, const std::vector<std::string>& points,
         const std::vector<std::string>& guards) {
        return visibility_sets(t, to_points(t, points), to_points(t, guards));
      },
      py::arg("terrain"), py::arg("points"), py::arg("guards"),
      "Per point: indices of guards seeing it at all / strictly from the left / right.");

  py::class_<VisibilityMatrix>(m, "VisibilityMatrix")
      .def_property_readonly("rows", &VisibilityMatrix::rows)
      .def_property_readonly("cols", &VisibilityMatrix::cols)
      .def("at", &VisibilityMatrix::at, py::arg("i"), py::arg("j"))
      .def("entries",
           [](const VisibilityMatrix& m_) {
             std::vector<std::vector<int>> out;
             for (const auto& row : m_.entries()) out.emplace_back(row.begin(), row.end());
             return out;
           })
      .def("row_labels",
           [](const VisibilityMatrix& m_) { return from_points(m_.row_labels()); })
      .def("col_labels",
           [](const VisibilityMatrix& m_) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& g : m_.col_labels())
               out.emplace_back(g.point.x.str(), side_name(g.side));
             return out;
           })
      .def("to_text", &VisibilityMatrix::to_text);

  m.def(
      "build_matrix",
      [](const Terrain& t, const std::vector<std::string>& points,
         const std::vector<std::pair<std::string, std::string>>& guards) {
        std::vector<GuardSpec> gs;
        gs.reserve(guards.size());
        for (const auto& g : guards) gs.push_back(to_spec(t, g));
        return VisibilityMatrix::build(t, to_points(t, points), gs);
      },
      py::arg("terrain"), py::arg("points"), py::arg("guards"),
      "guards are (x, side) pairs with side in {left, right, both}.");

  m.def("sort_greedy_standard", &sort_greedy_standard, py::arg("matrix"));
  m.def(
      "find_forbidden_submatrix",
      [](const VisibilityMatrix& m_) -> std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> {
        auto w = find_forbidden_submatrix(m_);
        if (!w) return std::nullopt;
        return std::make_tuple(w->row1, w->row2, w->col1, w->col2);
      },
      py::arg("matrix"), "Indices (row1, row2, col1, col2) of a [[1,1],[1,0]] pattern, or None.");
  m.def(
      "two_separable_decompose",
      [](const VisibilityMatrix& m_) {
        Decomposition d = two_separable_decompose(m_);
        return std::make_pair(d.left_part, d.right_part);
      },
      py::arg("matrix"));

  // covering LP
  py::class_<FractionalSolution>(m, "FractionalSolution")
      .def_property_readonly("values",
                             [](const FractionalSolution& s) { return from_rationals(s.values); })
      .def_property_readonly("objective",
                             [](const FractionalSolution& s) { return s.objective.str(); })
      .def_readonly("is_basic", &FractionalSolution::is_basic)
      .def_property_readonly("dual",
                             [](const FractionalSolution& s) { return from_rationals(s.dual); });

  m.def(
      "solve_covering_lp",
      [](const std::vector<std::vector<int>>& matrix, const std::vector<std::string>& weights) {
        return solve_covering_lp(CoveringLP(to_binary(matrix), to_rationals(weights)));
      },
      py::arg("matrix"), py::arg("weights"),
      "Exact basic optimum of min w.x s.t. Ax >= 1, x >= 0 over rationals.");
  m.def("is_integral", &is_integral, py::arg("solution"));
  m.def(
      "covering_lp_text",
      [](const std::vector<std::vector<int>>& matrix, const std::vector<std::string>& weights) {
        return CoveringLP(to_binary(matrix), to_rationals(weights)).to_text();
      },
      py::arg("matrix"), py::arg("weights"));

  // algorithms
  py::class_<GreedyResult>(m, "GreedyResult")
      .def_readonly("solution", &GreedyResult::solution)
      .def_property_readonly("witnesses",
                             [](const GreedyResult& g) { return from_points(g.witnesses); });

  py::class_<OneSidedRun>(m, "OneSidedRun")
      .def_readonly("solution", &OneSidedRun::solution)
      .def_property_readonly("lp_value", [](const OneSidedRun& r) { return r.lp_value.str(); })
      .def_property_readonly("in_left",
                             [](const OneSidedRun& r) {
                               return std::vector<bool>(r.in_left.begin(), r.in_left.end());
                             })
      .def_property_readonly("in_right", [](const OneSidedRun& r) {
        return std::vector<bool>(r.in_right.begin(), r.in_right.end());
      });

  py::class_<EssentialSegments>(m, "EssentialSegments")
      .def_property_readonly("breakpoints",
                             [](const EssentialSegments& s) { return from_points(s.breakpoints); })
      .def_property_readonly("representatives", [](const EssentialSegments& s) {
        return from_points(s.representatives);
      });

  py::class_<ContinuousRun>(m, "ContinuousRun")
      .def_readonly("solution", &ContinuousRun::solution)
      .def_property_readonly("one_sided_cost",
                             [](const ContinuousRun& r) { return r.one_sided_cost.str(); })
      .def_property_readonly("lp_value", [](const ContinuousRun& r) { return r.lp_value.str(); })
      .def_readonly("segments", &ContinuousRun::segments);

  py::class_<DiscreteRun>(m, "DiscreteRun")
      .def_readonly("solution", &DiscreteRun::solution)
      .def_property_readonly("lp_value", [](const DiscreteRun& r) { return r.lp_value.str(); })
      .def_property_readonly("lp_values",
                             [](const DiscreteRun& r) { return from_rationals(r.lp_values); })
      .def_readonly("overlap_route", &DiscreteRun::overlap_route)
      .def_property_readonly("self_guards",
                             [](const DiscreteRun& r) { return from_points(r.self_guards); })
      .def_property_readonly("self_guard_weight",
                             [](const DiscreteRun& r) { return r.self_guard_weight.str(); })
      .def_property_readonly("self_guard_bound",
                             [](const DiscreteRun& r) { return r.self_guard_bound.str(); });

  py::class_<Feasibility>(m, "Feasibility")
      .def_readonly("ok", &Feasibility::ok)
      .def_property_readonly("uncovered", [](const Feasibility& f) -> std::optional<std::string> {
        if (!f.uncovered) return std::nullopt;
        return f.uncovered->x.str();
      });

  m.def(
      "leftmost_seer",
      [](const Terrain& t, const std::string& p,
         const std::vector<std::string>& guards) -> std::optional<std::string> {
        auto g = leftmost_seer(t, t.point_at(Rational::parse(p)), to_points(t, guards));
        if (!g) return std::nullopt;
        return g->x.str();
      },
      py::arg("terrain"), py::arg("p"), py::arg("guards"));

  m.def(
      "uniform_left_guarding",
      [](const Terrain& t, const std::vector<std::string>& points,
         const std::vector<std::string>& guards) {
        return uniform_left_guarding(t, to_points(t, points), to_points(t, guards));
      },
      py::arg("terrain"), py::arg("points"), py::arg("guards"));

  m.def(
      "weighted_one_sided_optimal",
      [](const Terrain& t, const std::vector<std::string>& points,
         const std::vector<std::string>& guards, const std::string& side,
         const std::optional<std::vector<std::string>>& weights) {
        return weighted_one_sided_optimal(t, to_points(t, points), to_points(t, guards),
                                          side_from_name(side), to_rationals(weights));
      },
      py::arg("terrain"), py::arg("points"), py::arg("guards"), py::arg("side") = "left",
      py::arg("weights") = py::none());

  m.def(
      "one_sided_two_approx",
      [](const Terrain& t, const std::vector<std::string>& points,
         const std::vector<std::string>& left_guards, const std::vector<std::string>& right_guards,
         const std::optional<std::vector<std::string>>& left_weights,
         const std::optional<std::vector<std::string>>& right_weights) {
        return one_sided_two_approx(t, to_points(t, points), to_points(t, left_guards),
                                    to_points(t, right_guards), to_rationals(left_weights),
                                    to_rationals(right_weights));
      },
      py::arg("terrain"), py::arg("points"), py::arg("left_guards"), py::arg("right_guards"),
      py::arg("left_weights") = py::none(), py::arg("right_weights") = py::none());

  m.def("essential_segments", &essential_segments, py::arg("terrain"));
  m.def("continuous_four_approx", &continuous_four_approx, py::arg("terrain"));

  m.def(
      "discrete_guarding",
      [](const Terrain& t, const std::vector<std::string>& points,
         const std::vector<std::string>& guards,
         const std::optional<std::vector<std::string>>& weights) {
        return discrete_guarding(t, to_points(t, points), to_points(t, guards),
                                 to_rationals(weights));
      },
      py::arg("terrain"), py::arg("points"), py::arg("guards"), py::arg("weights") = py::none());

  m.def("brute_force_optimum", &brute_force_optimum, py::arg("instance"),
        py::arg("cap") = kDefaultOracleCap);
  m.def("verify_feasible", &verify_feasible, py::arg("instance"), py::arg("solution"));

  // io and rendering
  m.def("parse_instance", &parse_instance_text, py::arg("text"));
  m.def("serialize_instance", &serialize_instance, py::arg("instance"));
  m.def("serialize_solution", &serialize_solution, py::arg("solution"), py::arg("algorithm") = "");
  m.def(
      "parse_solution",
      [](const Terrain& t, const std::string& text) { return parse_solution_text(t, text); },
      py::arg("terrain"), py::arg("text"));
  m.def(
      "generate_random",
      [](std::uint64_t seed, int n_vertices, int n_points, int n_guards, const std::string& mode,
         bool weighted, int overlap) {
        GenOptions opt;
        opt.n_vertices = n_vertices;
        opt.n_points = n_points;
        opt.n_guards = n_guards;
        opt.mode = mode_from_name(mode);
        opt.weighted = weighted;
        opt.overlap = overlap;
        return generate_random(seed, opt);
      },
      py::arg("seed"), py::arg("n_vertices") = 6, py::arg("n_points") = 8, py::arg("n_guards") = 5,
      py::arg("mode") = "one_sided", py::arg("weighted") = false, py::arg("overlap") = 0);
  m.def(
      "render_svg",
      [](const GuardingInstance& inst, const std::optional<Solution>& sol) {
        return render_svg(inst, sol ? &*sol : nullptr);
      },
      py::arg("instance"), py::arg("solution") = py::none());
}
