#include "graphprod/json_io.hpp"

#include <fstream>

namespace graphprod {

using nlohmann::json;

RawGraph raw_graph_from_json(const json& j) {
  RawGraph raw;
  if (!j.is_object() || !j.contains("vertices"))
    throw Error("graph JSON must be an object with a 'vertices' array");
  for (const auto& v : j.at("vertices")) {
    std::string name = v.at("name").get<std::string>();
    const auto& o = v.at("order");
    if (o.is_string()) {
      if (o.get<std::string>() != "inf")
        throw Error("vertex order must be a positive integer or \"inf\"");
      raw.vertices.emplace_back(name, Order::inf());
    } else if (o.is_number_integer()) {
      std::int64_t n = o.get<std::int64_t>();
      if (n < 2) throw Error("vertex order must be at least 2 or \"inf\"");
      raw.vertices.emplace_back(name, Order::finite(n));
    } else {
      throw Error("vertex order must be a positive integer or \"inf\"");
    }
  }
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw Error("each edge must be a two-element array");
      raw.edges.emplace_back(e.at(0).get<std::string>(),
                             e.at(1).get<std::string>());
    }
  return raw;
}

json graph_to_json(const LabeledGraph& g) {
  json verts = json::array();
  for (const auto& [name, order] : g.to_raw().vertices) {
    json v{{"name", name}};
    if (order.is_finite())
      v["order"] = order.n;
    else
      v["order"] = "inf";
    verts.push_back(v);
  }
  json edges = json::array();
  for (const auto& [a, b] : g.to_raw().edges) edges.push_back(json::array({a, b}));
  return json{{"vertices", verts}, {"edges", edges}};
}

GraphRef load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("bad JSON in '" + path + "': " + e.what());
  }
  return make_graph(raw_graph_from_json(j));
}

LoadedMap vertex_map_from_json(const GraphRef& g, const json& j) {
  auto parse_block = [&](const json& block) {
    VertexMap m = identity_map(g);
    std::vector<bool> assigned(g->vertex_count(), false);
    for (const auto& [name, word] : block.items()) {
      int v = g->find(name);
      if (v < 0) throw Error("unknown vertex '" + name + "' in map");
      m[v] = parse_element(g, word.get<std::string>());
      assigned[v] = true;
    }
    for (int v = 0; v < g->vertex_count(); ++v)
      if (!assigned[v]) throw Error("map is missing vertex '" + g->name(v) + "'");
    return m;
  };
  LoadedMap out{parse_block(j.at("images")), std::nullopt};
  if (j.contains("inverse")) out.inverse = parse_block(j.at("inverse"));
  return out;
}

json automorphism_to_json(const Automorphism& a) {
  const GraphRef& g = a.graph();
  json images = json::object(), inverse = json::object();
  for (int v = 0; v < g->vertex_count(); ++v) {
    images[g->name(v)] = a.forward()[v].str();
    inverse[g->name(v)] = a.inverse_map()[v].str();
  }
  return json{{"images", images}, {"inverse", inverse}};
}

json descriptor_to_json(const LabeledGraph& g, const GeneratorDescriptor& d) {
  json out;
  if (const auto* ga = std::get_if<GraphAutDesc>(&d)) {
    out["kind"] = "graph_automorphism";
    json m = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
      m[g.name(v)] = g.name(ga->mapping[v]);
    out["mapping"] = m;
  } else if (const auto* f = std::get_if<FactorDesc>(&d)) {
    out["kind"] = "factor";
    out["v"] = g.name(f->vertex);
    out["m"] = f->m;
  } else if (const auto* t = std::get_if<TransvectionDesc>(&d)) {
    out["kind"] = "transvection";
    out["x"] = g.name(t->x);
    out["y"] = g.name(t->y);
    out["q"] = t->q;
  } else if (const auto* p = std::get_if<PartialConjDesc>(&d)) {
    out["kind"] = "partial_conjugation";
    out["v"] = g.name(p->vertex);
    out["component_index"] = p->component_index;
    json comp = json::array();
    for (int z : p->component.members()) comp.push_back(g.name(z));
    out["component"] = comp;
  } else if (const auto* in = std::get_if<InnerDesc>(&d)) {
    out["kind"] = "inner";
    out["w"] = in->word;
  } else if (const auto* w = std::get_if<WhiteheadDesc>(&d)) {
    out["kind"] = "whitehead";
    std::string a_str = g.name(w->a.vertex);
    if (w->a.exponent != 1) a_str += "^" + std::to_string(w->a.exponent);
    out["a"] = a_str;
    json letters = json::array();
    for (const auto& l : w->letters) {
      std::string s = g.name(l.vertex);
      if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
      letters.push_back(s);
    }
    out["A"] = letters;
  }
  return out;
}

json generator_to_json(const LabeledGraph& g, const Generator& gen) {
  json out = descriptor_to_json(g, gen.desc);
  json images = json::object();
  for (int v = 0; v < g.vertex_count(); ++v)
    images[g.name(v)] = gen.aut.forward()[v].str();
  out["images"] = images;
  if (!gen.aliases.empty()) {
    json aliases = json::array();
    for (const auto& a : gen.aliases) aliases.push_back(descriptor_to_json(g, a));
    out["aliases"] = aliases;
  }
  return out;
}

json centralizer_to_json(const CentralizerPresentation& pres) {
  json out;
  out["whole_group"] = pres.whole_group;
  const GraphRef& g = pres.conjugator.graph();
  json factors = json::array();
  for (const auto& f : pres.factors) factors.push_back(f.str());
  out["factors"] = factors;
  if (!pres.whole_group && !pres.basic.factors.empty()) {
    json bf = json::array();
    for (const auto& f : pres.basic.factors)
      bf.push_back(json{{"root", f.root.str()}, {"exponent", f.exponent}});
    out["basic_form"] = bf;
  }
  json link = json::array();
  for (int z : pres.link.members()) link.push_back(g->name(z));
  out["link"] = link;
  out["conjugator"] = pres.conjugator.str();
  json gens = json::array();
  for (const auto& e : pres.generators()) gens.push_back(e.str());
  out["generators"] = gens;
  return out;
}

}  // namespace graphprod
