#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "matchroots/campaign.hpp"
#include "matchroots/canonical.hpp"
#include "matchroots/families.hpp"
#include "matchroots/lemmas.hpp"
#include "matchroots/match_poly.hpp"
#include "matchroots/structure.hpp"

namespace py = pybind11;
using namespace matchroots;

namespace {

py::int_ to_py(const Integer& c) { return py::int_(py::str(c.get_str())); }

py::list coeffs_to_py(const IntPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

IntPoly poly_from_py(const py::sequence& coeffs) {
  std::vector<std::string> parts;
  for (auto c : coeffs) parts.push_back(py::str(py::int_(c.cast<py::object>())));
  return from_coeff_strings(parts);
}

RootClass root_from_py(const py::sequence& coeffs) {
  IntPoly p = poly_from_py(coeffs);
  if (!p.is_zero() && sgn(p.leading()) < 0) p = -p;
  return RootClass(p);
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::set set_to_py(VertexSet s) {
  py::set out;
  for (auto v : s) out.add(py::int_(v));
  return out;
}

py::dict table_to_py(const SignTable& t) {
  py::dict d;
  d["root"] = coeffs_to_py(t.root.minpoly());
  d["mult"] = t.base_mult;
  py::list signs;
  for (auto v : t.present) signs.append(std::string(to_string(t.signs[v])));
  d["signs"] = signs;
  d["essential"] = set_to_py(t.essential);
  d["neutral"] = set_to_py(t.neutral);
  d["positive"] = set_to_py(t.positive);
  d["special"] = set_to_py(t.special);
  return d;
}

py::list factored_to_py(const FactoredPoly& f) {
  py::list out;
  for (const auto& x : f.factors()) out.append(py::make_tuple(coeffs_to_py(x.root.minpoly()), x.exponent));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact matching polynomials, root-wise vertex signs and Gallai-Edmonds style decompositions";

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
             std::vector<Edge> es;
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph::from_edge_list(n, es);
           }),
           py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_static("parse", [](const std::string& text) { return parse_graph_input(text); }, "graph6 or \"n; u-v, ...\"")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               std::vector<std::pair<Vertex, Vertex>> out;
                               for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def("edge_list", [](const Graph& g) { return to_edge_list_text(g); })
      .def("canonical_form", [](const Graph& g) { return canonical_form(g); })
      .def("is_vertex_transitive", [](const Graph& g) { return is_vertex_transitive(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__hash__", &Graph::hash)
      .def("__repr__", [](const Graph& g) { return "Graph(\"" + to_edge_list_text(g) + "\")"; });

  m.def("enumerate_graphs", &enumerate_graphs_up_to_iso, py::arg("n"), py::arg("limit") = kEnumerationLimit,
        "one representative per isomorphism class on n vertices");
  m.def("fixtures", [] {
    py::list out;
    for (const auto& f : fixture_graphs()) out.append(py::make_tuple(f.name, f.graph));
    return out;
  });

  m.def("match_counts", [](const Graph& g) {
    py::list out;
    for (const auto& c : match_counts(g).p) out.append(to_py(c));
    return out;
  });
  m.def("matching_polynomial", [](const Graph& g) { return coeffs_to_py(matching_polynomial(g)); },
        "ascending integer coefficients of mu(G,x)");
  m.def("mu_by_edge_recurrence", [](const Graph& g) { return coeffs_to_py(mu_by_edge_recurrence(g)); });
  m.def("mu_by_vertex_recurrence", [](const Graph& g) { return coeffs_to_py(mu_by_vertex_recurrence(g)); });
  m.def("poly_str", [](const py::sequence& c) { return poly_from_py(c).str(); });
  m.def("factor", [](const py::sequence& c) {
    const auto f = factor(poly_from_py(c));
    return py::make_tuple(to_py(f.unit()), factored_to_py(f));
  });
  m.def("root_support", [](const Graph& g) { return factored_to_py(root_support(g)); },
        "[(minimal polynomial coefficients, multiplicity), ...] in canonical order");
  m.def("deficiency", &deficiency);
  m.def("matching_number", [](const Graph& g) { return matching_number(g); });

  m.def("classify", [](const Graph& g, const py::sequence& root) { return table_to_py(classify_all(g, root_from_py(root))); },
        py::arg("graph"), py::arg("root"));
  m.def("decomposition",
        [](const Graph& g, const py::sequence& root) {
          const auto d = decomposition(g, root_from_py(root));
          py::dict out;
          out["D"] = set_to_py(d.D);
          out["A"] = set_to_py(d.A);
          out["C"] = set_to_py(d.C);
          return out;
        },
        py::arg("graph"), py::arg("root"));
  m.def("is_essential_path",
        [](const Graph& g, const py::sequence& root, const std::vector<Vertex>& path) { return is_essential_path(g, root_from_py(root), path); },
        py::arg("graph"), py::arg("root"), py::arg("path"));
  m.def("select_roots", [](const Graph& g, const std::string& selector) {
    py::list out;
    for (const auto& r : parse_root_selector(selector, g)) out.append(coeffs_to_py(r.minpoly()));
    return out;
  });

  m.def("lemmas", [] {
    py::list out;
    for (const auto& info : lemma_catalog()) {
      out.append(py::make_tuple(std::string(info.id), info.scope == LemmaScope::PerRoot ? "root" : "graph", info.exploratory_only,
                                std::string(info.summary)));
    }
    return out;
  });
  m.def(
      "verify_graph",
      [](const Graph& g, std::vector<std::string> lemmas, std::size_t path_cap, bool exploratory) {
        CampaignConfig config;
        config.lemmas = std::move(lemmas);
        config.path_cap = path_cap;
        config.exploratory = exploratory;
        py::list out;
        for (const auto& r : verify_graph(g, config, select_lemmas(config.lemmas))) out.append(json_to_py(r.to_json()));
        return out;
      },
      py::arg("graph"), py::arg("lemmas") = std::vector<std::string>{}, py::arg("path_cap") = 4, py::arg("exploratory") = false,
      "LemmaReport dicts for one graph; skipped reports are dropped");
  m.def(
      "run_campaign",
      [](std::size_t max_n, std::vector<std::string> lemmas, std::size_t path_cap, bool exploratory, std::size_t jobs) {
        CampaignConfig config;
        config.max_n = max_n;
        config.lemmas = std::move(lemmas);
        config.path_cap = path_cap;
        config.exploratory = exploratory;
        config.jobs = jobs;
        std::ostringstream out;
        CampaignSummary s;
        {
          py::gil_scoped_release release;
          s = run_campaign(config, &out);
        }
        return py::make_tuple(out.str(), json_to_py(s.to_json()));
      },
      py::arg("max_n") = 5, py::arg("lemmas") = std::vector<std::string>{}, py::arg("path_cap") = 4, py::arg("exploratory") = false,
      py::arg("jobs") = 1, "(JSON-lines report text, summary dict) for the generated corpus");

  py::register_exception<InterlacingViolation>(m, "InterlacingViolation");
  py::register_exception<CampaignError>(m, "CampaignError", PyExc_ValueError);
}
