// Python bindings for the graph-product library. Graphs load from the
// same JSON the CLI uses; words go in and out as strings in the word
// syntax, richer structures as plain dicts/lists via JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "graphprod/json_io.hpp"
#include "graphprod/oracle.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace graphprod;

namespace {

struct PyGraph {
  GraphRef g;
};

struct PyElement {
  GroupElement e;
};

py::object json_to_py(const json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

PyElement make_element(const PyGraph& g, const std::string& text) {
  return {parse_element(g.g, text)};
}

VertexMap map_from_dict(const GraphRef& g, const py::dict& images) {
  json j;
  j["images"] = json::object();
  for (const auto& item : images)
    j["images"][py::cast<std::string>(item.first)] =
        py::cast<std::string>(item.second);
  return vertex_map_from_json(g, j).images;
}

}  // namespace

PYBIND11_MODULE(_graphprod, m) {
  m.doc() = "graph products of finitely generated cyclic groups";

  py::register_exception<Error>(m, "GraphProdError");

  py::class_<PyGraph>(m, "Graph")
      .def(py::init([](const std::string& json_text) {
             return PyGraph{make_graph(raw_graph_from_json(json::parse(json_text)))};
           }),
           py::arg("json_text"))
      .def_static("from_file",
                  [](const std::string& path) { return PyGraph{load_graph_file(path)}; })
      .def("vertex_count", [](const PyGraph& g) { return g.g->vertex_count(); })
      .def("vertices",
           [](const PyGraph& g) {
             py::list out;
             for (int v = 0; v < g.g->vertex_count(); ++v) {
               Order o = g.g->order(v);
               out.append(py::make_tuple(g.g->name(v),
                                         o.is_finite() ? py::cast(o.n)
                                                       : py::cast(std::string("inf"))));
             }
             return out;
           })
      .def("adjacent",
           [](const PyGraph& g, const std::string& x, const std::string& y) {
             return g.g->adjacent(g.g->index_of(x), g.g->index_of(y));
           })
      .def("link",
           [](const PyGraph& g, const std::string& v) {
             py::list out;
             for (int x : g.g->link(g.g->index_of(v)).members())
               out.append(g.g->name(x));
             return out;
           })
      .def("star",
           [](const PyGraph& g, const std::string& v) {
             py::list out;
             for (int x : g.g->star(g.g->index_of(v)).members())
               out.append(g.g->name(x));
             return out;
           })
      .def("dominates",
           [](const PyGraph& g, const std::string& x, const std::string& y) {
             return g.g->dominates(g.g->index_of(x), g.g->index_of(y));
           })
      .def("dominates_strongly",
           [](const PyGraph& g, const std::string& x, const std::string& y) {
             return g.g->dominates_strongly(g.g->index_of(x), g.g->index_of(y));
           })
      .def("components_minus_star",
           [](const PyGraph& g, const std::string& v) {
             py::list out;
             for (VertexSet comp : g.g->components_minus_star(g.g->index_of(v))) {
               py::list one;
               for (int x : comp.members()) one.append(g.g->name(x));
               out.append(one);
             }
             return out;
           })
      .def("maximal_cliques",
           [](const PyGraph& g) {
             py::list out;
             for (VertexSet cl : g.g->maximal_cliques()) {
               py::list one;
               for (int x : cl.members()) one.append(g.g->name(x));
               out.append(one);
             }
             return out;
           })
      .def("labeled_automorphisms",
           [](const PyGraph& g) {
             py::list out;
             for (const auto& gamma : g.g->labeled_automorphisms()) {
               py::dict d;
               for (int v = 0; v < g.g->vertex_count(); ++v)
                 d[py::cast(g.g->name(v))] = g.g->name(gamma[v]);
               out.append(d);
             }
             return out;
           })
      .def("to_json",
           [](const PyGraph& g) { return graph_to_json(*g.g).dump(); })
      .def("word", &make_element, py::arg("text"));

  py::class_<PyElement>(m, "Element")
      .def("__str__", [](const PyElement& e) { return e.e.str(); })
      .def("__repr__",
           [](const PyElement& e) { return "<Element '" + e.e.str() + "'>"; })
      .def("__eq__",
           [](const PyElement& a, const PyElement& b) { return a.e == b.e; })
      .def("__hash__",
           [](const PyElement& e) { return py::hash(py::cast(e.e.str())); })
      .def("__mul__",
           [](const PyElement& a, const PyElement& b) {
             return PyElement{multiply(a.e, b.e)};
           })
      .def("__invert__", [](const PyElement& e) { return PyElement{invert(e.e)}; })
      .def("__pow__",
           [](const PyElement& e, std::int64_t n) { return PyElement{power(e.e, n)}; })
      .def("length", [](const PyElement& e) { return e.e.length(); })
      .def("support",
           [](const PyElement& e) {
             py::list out;
             for (int v : e.e.support().members())
               out.append(e.e.graph()->name(v));
             return out;
           })
      .def("cyclic_support",
           [](const PyElement& e) {
             py::list out;
             for (int v : cyclic_support(e.e).members())
               out.append(e.e.graph()->name(v));
             return out;
           })
      .def("is_identity", [](const PyElement& e) { return e.e.is_identity(); })
      .def("is_cyclically_reduced",
           [](const PyElement& e) { return is_cyclically_reduced(e.e); })
      .def("cyclically_reduce",
           [](const PyElement& e) {
             auto [conj, core] = cyclically_reduce(e.e);
             return py::make_tuple(PyElement{conj}, PyElement{core});
           })
      .def("order",
           [](const PyElement& e) -> py::object {
             Order o = order_of(e.e);
             if (o.is_finite()) return py::cast(o.n);
             return py::cast(std::string("inf"));
           })
      .def("commutes_with",
           [](const PyElement& a, const PyElement& b) { return commutes(a.e, b.e); })
      .def("rank", [](const PyElement& e) { return rank(e.e); })
      .def("centralizer",
           [](const PyElement& e) { return json_to_py(centralizer_to_json(centralizer(e.e))); })
      .def("basic_form",
           [](const PyElement& e) {
             py::list out;
             for (const auto& f : basic_form(e.e).factors)
               out.append(py::make_tuple(PyElement{f.root}, f.exponent));
             return out;
           })
      .def("root", [](const PyElement& e) {
        RootResult r = root(e.e);
        return py::make_tuple(PyElement{r.root}, r.exponent, r.unique);
      });

  m.def(
      "generators",
      [](const PyGraph& g, const std::string& which) {
        std::vector<Generator> gens;
        if (which == "all")
          gens = generating_set(g.g);
        else if (which == "star")
          gens = star_generating_set(g.g);
        else if (which == "one")
          gens = subgroup_one_set(g.g);
        else if (which == "whitehead")
          gens = whitehead_type_I(g.g);
        else
          throw Error("unknown family '" + which + "'");
        py::list out;
        for (const auto& gen : gens)
          out.append(json_to_py(generator_to_json(*g.g, gen)));
        return out;
      },
      py::arg("graph"), py::arg("which") = "all");

  m.def("is_well_defined", [](const PyGraph& g, const py::dict& images) {
    auto rep = is_well_defined(*g.g, map_from_dict(g.g, images));
    return py::make_tuple(rep.ok, rep.witness);
  });

  m.def("apply_map",
        [](const PyGraph& g, const py::dict& images, const std::string& word) {
          VertexMap m_ = map_from_dict(g.g, images);
          auto rep = is_well_defined(*g.g, m_);
          if (!rep.ok) throw Error("map is not well-defined: " + rep.witness);
          return PyElement{apply_map(m_, parse_element(g.g, word))};
        });

  m.def("whitehead_coverage", [](const PyGraph& g) {
    WhiteheadCoverage cov = check_generators_in_whitehead(g.g);
    py::list rows;
    auto all = generating_set(g.g);
    for (const auto& wt : cov.witnesses)
      rows.append(py::make_tuple(describe(*g.g, all[wt.generator_index].desc),
                                 wt.how));
    return py::make_tuple(cov.all_covered, rows);
  });

  m.def(
      "ball_size",
      [](const PyGraph& g, int radius) {
        return enumerate_ball(g.g, radius).elements.size();
      },
      py::arg("graph"), py::arg("radius") = 4);

  m.def("finite_group_order", [](const PyGraph& g) {
    return enumerate_finite_group(g.g).elements.size();
  });

  m.def("brute_automorphism_count", [](const PyGraph& g) {
    return brute_automorphism_group(g.g).size();
  });

  // closure of the generating set compared against brute force; the
  // desk-scale generation check for one finite instance
  m.def("verify_generating_set", [](const PyGraph& g) {
    std::vector<Automorphism> gens;
    for (const auto& gen : generating_set(g.g)) gens.push_back(gen.aut);
    ClosureResult res = closure(g.g, gens);
    if (!res.complete) throw Error("closure bound exceeded");
    std::set<std::string> closure_keys, brute_keys;
    for (const auto& mp : res.maps) closure_keys.insert(map_key(mp));
    for (const auto& mp : brute_automorphism_group(g.g))
      brute_keys.insert(map_key(mp));
    return py::make_tuple(closure_keys == brute_keys, closure_keys.size(),
                          brute_keys.size());
  });

  m.def(
      "decompose",
      [](const PyGraph& g, const py::dict& images, const py::dict& inv,
         int depth) -> py::object {
        Automorphism target(g.g, map_from_dict(g.g, images),
                            map_from_dict(g.g, inv));
        std::vector<Automorphism> pool;
        std::vector<std::string> labels;
        for (const auto& gen : generating_set(g.g)) {
          pool.push_back(gen.aut);
          labels.push_back(describe(*g.g, gen.desc));
          pool.push_back(inverse(gen.aut));
          labels.push_back(describe(*g.g, gen.desc) + "^-1");
        }
        auto word = decompose_over_generators(target, pool, depth);
        if (!word) return py::none();
        py::list out;
        for (int idx : *word) out.append(labels[idx]);
        return out;
      },
      py::arg("graph"), py::arg("images"), py::arg("inverse"),
      py::arg("depth") = 8);
}
