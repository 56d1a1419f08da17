// Copyright 2026 The gra-engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pybind11 bindings for the gra library. Structured results (fits,
// classifications, reports) cross the boundary as JSON text and are decoded
// on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gra/dense_oracle.hpp"
#include "gra/engine.hpp"
#include "gra/error.hpp"
#include "gra/export.hpp"
#include "gra/graph.hpp"
#include "gra/graph_file.hpp"
#include "gra/growth.hpp"
#include "gra/presets.hpp"
#include "gra/rule.hpp"
#include "gra/serialize.hpp"
#include "gra/sweep.hpp"

namespace py = pybind11;
using namespace gra;

namespace {

using RuleLike = std::variant<Rule, long long>;

Rule as_rule(const RuleLike& r) {
  if (const auto* n = std::get_if<long long>(&r)) return decode(*n);
  return std::get<Rule>(r);
}

Budget make_budget(std::uint64_t max_steps, std::uint64_t max_order,
                   double wall_clock_seconds, std::size_t cycle_window) {
  Budget b;
  b.max_steps = max_steps;
  b.max_order = max_order;
  b.wall_clock_seconds = wall_clock_seconds;
  b.cycle_window = cycle_window;
  return b;
}

ExportFormat as_format(const std::string& name) {
  auto f = parse_export_format(name);
  if (!f) throw Error(Errc::Parse, "unknown export format '" + name + "'");
  return *f;
}

std::string graph_repr(const Graph& g) {
  std::ostringstream s;
  s << "Graph(order=" << g.order() << ", alive=";
  std::size_t alive = 0;
  for (auto x : g.states()) alive += x;
  s << alive << ", time=" << g.time() << ")";
  return s.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Binary-state 3-regular graph rewriting automata";

  static py::exception<Error> gra_error(m, "GraError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(e.what(), std::string(errc_name(e.code())));
      PyErr_SetObject(gra_error.ptr(), args.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init([](const std::vector<Edge>& edges, const std::vector<int>& states) {
             return Graph::from_edges(edges, states);
           }),
           py::arg("edges"), py::arg("states"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("time", &Graph::time)
      .def_property_readonly("states", [](const Graph& g) {
        return std::vector<int>(g.states().begin(), g.states().end());
      })
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v >= g.order()) throw Error(Errc::IndexOutOfRange, "vertex out of range");
        return g.neighbors(v);
      })
      .def("edges", &Graph::edges)
      .def("has_edge", &Graph::has_edge)
      .def("validate", &Graph::validate)
      .def("same_labeled_graph", &Graph::same_labeled_graph)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", &graph_repr);

  m.def("k4_one_alive", &k4_one_alive);
  m.def("canonical_g0", &canonical_g0);
  m.def("load_initial_graph", &load_initial_graph, py::arg("name_or_path"));
  m.def("parse_graph_text", &parse_graph_text);
  m.def("format_graph_text", &format_graph_text);
  m.def("configuration_vector", [](const Graph& g) {
    auto c = configuration_vector(g);
    return std::vector<int>(c.begin(), c.end());
  });
  m.def("configuration_census", &configuration_census);
  m.def("complement_states", &complement_states);
  m.def("state_fingerprint", [](const Graph& g) { return state_fingerprint(g).hex(); });
  m.def("graph_digest", [](const Graph& g) { return graph_digest(g).hex(); });

  py::class_<Rule>(m, "Rule")
      .def_readonly("number", &Rule::number)
      .def_readonly("next_state", &Rule::next_state)
      .def_readonly("divides", &Rule::divides)
      .def("__eq__", [](const Rule& a, const Rule& b) { return a == b; })
      .def("__repr__", [](const Rule& r) {
        return "Rule(" + std::to_string(r.number) + ")";
      });
  m.def("decode", &decode, py::arg("number"));
  m.def("encode", &encode);
  m.def("single_division_subset", &single_division_subset);
  m.def("complement_rule", [](const RuleLike& r) { return complement_rule(as_rule(r)); });
  m.def("parse_rule_number", [](const std::string& s) { return parse_rule_number(s); });

  py::class_<StepOutcome>(m, "StepOutcome")
      .def_readonly("graph", &StepOutcome::graph)
      .def_readonly("divisions_performed", &StepOutcome::divisions_performed)
      .def_readonly("order_increment", &StepOutcome::order_increment);
  m.def("step", [](const Graph& g, const RuleLike& r) { return step(g, as_rule(r)); },
        py::arg("graph"), py::arg("rule"));
  m.def("reference_step_dense",
        [](const Graph& g, const RuleLike& r, std::size_t cap) {
          return reference_step_dense(g, as_rule(r), cap);
        },
        py::arg("graph"), py::arg("rule"), py::arg("cap") = kDefaultOracleCap);
  m.def("divide_vertex", &divide_vertex, py::arg("graph"), py::arg("vertex"));
  m.def("apply_divisions",
        [](const Graph& g, const std::vector<std::uint8_t>& d) { return apply_divisions(g, d); },
        py::arg("graph"), py::arg("divisions"));

  py::class_<EvolutionTrace>(m, "EvolutionTrace")
      .def_readonly("rule", &EvolutionTrace::rule)
      .def_readonly("orders", &EvolutionTrace::orders)
      .def_readonly("increments", &EvolutionTrace::increments)
      .def_readonly("cycle_period", &EvolutionTrace::cycle_period)
      .def_readonly("cycle_entry", &EvolutionTrace::cycle_entry)
      .def_readonly("elapsed_seconds", &EvolutionTrace::elapsed_seconds)
      .def_property_readonly("stop_reason", [](const EvolutionTrace& t) {
        return std::string(stop_reason_name(t.stop_reason));
      })
      .def_property_readonly("steps", &EvolutionTrace::steps)
      .def_property_readonly("final_order", &EvolutionTrace::final_order)
      .def("series_csv", [](const EvolutionTrace& t) { return series_csv(t); });

  const Budget defaults;
  m.def("evolve",
        [](const Graph& g, const RuleLike& r, std::uint64_t max_steps, std::uint64_t max_order,
           double wall_clock_seconds, std::size_t cycle_window) {
          const Rule rule = as_rule(r);
          const Budget b = make_budget(max_steps, max_order, wall_clock_seconds, cycle_window);
          std::optional<Evolution> ev;
          {
            py::gil_scoped_release nogil;
            ev.emplace(evolve(g, rule, b));
          }
          return py::make_tuple(std::move(ev->graph), std::move(ev->trace));
        },
        py::arg("graph"), py::arg("rule"), py::arg("max_steps") = defaults.max_steps,
        py::arg("max_order") = defaults.max_order,
        py::arg("wall_clock_seconds") = defaults.wall_clock_seconds,
        py::arg("cycle_window") = defaults.cycle_window);

  m.def("_classify", [](const EvolutionTrace& t, const std::string& thresholds) {
    return to_json(classify(t, thresholds_from_json(nlohmann::json::parse(thresholds))))
        .dump();
  });
  m.def("_classify_orders", [](const std::vector<std::uint64_t>& orders,
                               std::optional<std::uint64_t> cycle_period,
                               const std::string& thresholds) {
    EvolutionTrace t;
    t.orders = orders;
    for (std::size_t i = 1; i < orders.size(); ++i) {
      if (orders[i] < orders[i - 1]) throw Error(Errc::Parse, "orders must be non-decreasing");
      t.increments.push_back(orders[i] - orders[i - 1]);
    }
    t.cycle_period = cycle_period;
    return to_json(classify(t, thresholds_from_json(nlohmann::json::parse(thresholds))))
        .dump();
  });
  m.def("_fit_growth", [](const std::vector<std::uint64_t>& orders, std::size_t begin,
                          std::size_t end, double time_origin, bool refine) {
    FitOptions o;
    o.time_origin = time_origin;
    o.nonlinear_refinement = refine;
    const GrowthFits f = fit_growth(orders, begin, end, o);
    nlohmann::json j = {{"linear", to_json(f.linear)},
                        {"power", to_json(f.power)},
                        {"exponential", to_json(f.exponential)},
                        {"begin", f.begin},
                        {"end", f.end}};
    return j.dump();
  });
  m.def("increment_periodicity",
        [](const std::vector<std::uint64_t>& incs, std::size_t cap)
            -> std::optional<std::pair<std::size_t, std::size_t>> {
          auto p = increment_periodicity(incs, cap);
          if (!p) return std::nullopt;
          return std::make_pair(p->period, p->preperiod);
        },
        py::arg("increments"), py::arg("cap") = kDefaultPeriodCap);
  m.def("zero_growth_intervals", [](const std::vector<std::uint64_t>& incs) {
    return zero_growth_intervals(incs);
  });
  m.def("increment_support",
        [](const std::vector<std::uint64_t>& incs, std::size_t begin, std::size_t end) {
          return increment_support(incs, begin, end);
        });

  m.def("export_graph", [](const Graph& g, const std::string& format) {
    return export_graph_string(g, as_format(format));
  }, py::arg("graph"), py::arg("format") = "dot");

  m.def("_run_sweep",
        [](const std::vector<RuleNumber>& rules, std::optional<Graph> initial,
           std::string initial_name, std::uint64_t max_steps, std::uint64_t max_order,
           double wall_clock_seconds, std::size_t cycle_window, const std::string& thresholds,
           unsigned workers, std::optional<std::filesystem::path> journal, bool resume) {
          SweepConfig c;
          c.rules = rules;
          if (initial) {
            c.initial = *initial;
            c.initial_name = std::move(initial_name);
          }
          c.budget = make_budget(max_steps, max_order, wall_clock_seconds, cycle_window);
          c.thresholds = thresholds_from_json(nlohmann::json::parse(thresholds));
          c.workers = workers;
          py::gil_scoped_release nogil;
          SweepOptions o;
          if (resume) {
            if (!journal) throw Error(Errc::Parse, "resume needs a journal path");
            return report_to_string(resume_sweep(*journal, c, o));
          }
          o.journal = journal;
          return report_to_string(run_sweep(c, o));
        });
  m.def("preset_names", &preset_names);
  m.def("_preset_text", [](const std::string& n) { return preset_text(n); });
}
