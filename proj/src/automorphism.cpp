#include "graphprod/automorphism.hpp"

#include <algorithm>
#include <unordered_map>

#include "graphprod/centralizer.hpp"

namespace graphprod {

WellDefinedReport is_well_defined(const LabeledGraph& g, const VertexMap& m) {
  if (static_cast<int>(m.size()) != g.vertex_count())
    return {false, "map is not total"};
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (order_of(m[v]) != g.order(v))
      return {false, "order of image of '" + g.name(v) + "' is " +
                         to_string(order_of(m[v])) + ", expected " +
                         to_string(g.order(v))};
  }
  for (int x = 0; x < g.vertex_count(); ++x)
    for (int y = x + 1; y < g.vertex_count(); ++y)
      if (g.adjacent(x, y) && !commutes(m[x], m[y]))
        return {false, "images of adjacent '" + g.name(x) + "', '" + g.name(y) +
                           "' do not commute"};
  return {};
}

GroupElement apply_map(const VertexMap& m, const GroupElement& e) {
  GroupElement out = GroupElement::identity(e.graph());
  for (const auto& s : e.syllables())
    out = multiply(out, power(m[s.vertex], s.exponent));
  return out;
}

VertexMap identity_map(const GraphRef& g) {
  VertexMap m;
  for (int v = 0; v < g->vertex_count(); ++v)
    m.push_back(GroupElement::vertex(g, v));
  return m;
}

Automorphism::Automorphism(GraphRef g, VertexMap forward, VertexMap inverse)
    : graph_(std::move(g)), forward_(std::move(forward)), inverse_(std::move(inverse)) {
  auto fwd_ok = is_well_defined(*graph_, forward_);
  if (!fwd_ok.ok) throw Error("forward map ill-defined: " + fwd_ok.witness);
  auto inv_ok = is_well_defined(*graph_, inverse_);
  if (!inv_ok.ok) throw Error("inverse map ill-defined: " + inv_ok.witness);
  for (int v = 0; v < graph_->vertex_count(); ++v) {
    GroupElement vert = GroupElement::vertex(graph_, v);
    if (apply_map(inverse_, forward_[v]) != vert ||
        apply_map(forward_, inverse_[v]) != vert)
      throw Error("maps are not mutually inverse at vertex '" +
                  graph_->name(v) + "'");
  }
}

Automorphism Automorphism::identity(GraphRef g) {
  VertexMap m = identity_map(g);
  return Automorphism(std::move(g), m, m);
}

std::string Automorphism::key() const {
  std::string out;
  for (const auto& e : forward_) {
    out += e.str();
    out += '|';
  }
  return out;
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  if (f.graph() != g.graph()) throw Error("automorphisms on different graphs");
  VertexMap fwd, inv;
  for (int v = 0; v < f.graph()->vertex_count(); ++v) {
    fwd.push_back(f.apply(g.forward()[v]));
    inv.push_back(g.apply_inverse(f.inverse_map()[v]));
  }
  return Automorphism(f.graph(), std::move(fwd), std::move(inv));
}

Automorphism inverse(const Automorphism& a) {
  return Automorphism(a.graph(), a.inverse_map(), a.forward());
}

bool equal(const Automorphism& f, const Automorphism& g) {
  return f.graph() == g.graph() && f.forward() == g.forward();
}

VertexSet conjugating_set(const Automorphism& theta) {
  const GraphRef& g = theta.graph();
  VertexSet out;
  for (int v = 0; v < g->vertex_count(); ++v) {
    GroupElement core = cyclically_reduce(theta.forward()[v]).core;
    if (core == GroupElement::vertex(g, v)) out.add(v);
  }
  return out;
}

namespace {

bool complement_connected(const LabeledGraph& g, VertexSet s) {
  if (s.empty()) return true;
  auto verts = s.members();
  VertexSet comp = VertexSet::single(verts[0]);
  std::vector<int> stack{verts[0]};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : verts)
      if (!comp.contains(w) && w != v && !g.adjacent(v, w)) {
        comp.add(w);
        stack.push_back(w);
      }
  }
  return comp == s;
}

}  // namespace

VertexSet simple_set(const Automorphism& theta) {
  const GraphRef& g = theta.graph();
  VertexSet out;
  for (int v = 0; v < g->vertex_count(); ++v) {
    VertexSet cs = cyclic_support(theta.forward()[v]);
    if (cs.contains(v) && complement_connected(*g, cs)) out.add(v);
  }
  return out;
}

bool is_simple(const Automorphism& theta) {
  return simple_set(theta) == theta.graph()->vertices();
}

bool is_quasi_simple(const Automorphism& theta) {
  const GraphRef& g = theta.graph();
  for (int v = 0; v < g->vertex_count(); ++v) {
    VertexSet cs = cyclic_support(theta.forward()[v]);
    if (!complement_connected(*g, cs)) return false;
    if (!cs.subset_of(g->gamma_v(v))) return false;
  }
  return true;
}

GraphAutomorphism induced_graph_automorphism(const Automorphism& theta) {
  const GraphRef& g = theta.graph();
  std::vector<VertexSet> csupps;
  for (int v = 0; v < g->vertex_count(); ++v)
    csupps.push_back(cyclic_support(theta.forward()[v]));
  for (const auto& gamma : g->labeled_automorphisms()) {
    bool ok = true;
    for (int v = 0; v < g->vertex_count() && ok; ++v)
      if (!csupps[v].contains(gamma[v])) ok = false;
    if (ok) return gamma;
  }
  throw Error("no induced graph automorphism found (input is not an automorphism?)");
}

std::optional<std::vector<int>> decompose_over_generators(
    const Automorphism& target, const std::vector<Automorphism>& gens,
    int max_depth) {
  const GraphRef& g = target.graph();
  Automorphism id = Automorphism::identity(g);
  if (equal(target, id)) return std::vector<int>{};

  // forward frontier from the identity, backward frontier from target;
  // meet in the middle on image-tuple keys
  struct Node {
    Automorphism aut;
    std::vector<int> word;
  };
  std::unordered_map<std::string, std::vector<int>> fwd_seen{{id.key(), {}}};
  std::unordered_map<std::string, std::vector<int>> bwd_seen{{target.key(), {}}};
  std::vector<Node> fwd_layer{{id, {}}}, bwd_layer{{target, {}}};

  int fwd_depth = (max_depth + 1) / 2, bwd_depth = max_depth / 2;
  auto stitch = [&](const std::vector<int>& fwd_word,
                    const std::vector<int>& bwd_word) {
    // target = fwd ∘ (reversed bwd suffix)
    std::vector<int> out = fwd_word;
    for (auto it = bwd_word.rbegin(); it != bwd_word.rend(); ++it)
      out.push_back(*it);
    return out;
  };

  if (auto hit = bwd_seen.find(id.key()); hit != bwd_seen.end())
    return stitch({}, hit->second);

  for (int depth = 1; depth <= std::max(fwd_depth, bwd_depth); ++depth) {
    if (depth <= fwd_depth) {
      std::vector<Node> next;
      for (const auto& node : fwd_layer)
        for (std::size_t i = 0; i < gens.size(); ++i) {
          Automorphism cand = compose(node.aut, gens[i]);
          std::vector<int> word = node.word;
          word.push_back(static_cast<int>(i));
          if (!fwd_seen.emplace(cand.key(), word).second) continue;
          if (auto hit = bwd_seen.find(cand.key()); hit != bwd_seen.end())
            return stitch(word, hit->second);
          next.push_back({std::move(cand), std::move(word)});
        }
      fwd_layer = std::move(next);
    }
    if (depth <= bwd_depth) {
      std::vector<Node> next;
      for (const auto& node : bwd_layer)
        for (std::size_t i = 0; i < gens.size(); ++i) {
          Automorphism cand = compose(node.aut, inverse(gens[i]));
          std::vector<int> word = node.word;
          word.push_back(static_cast<int>(i));
          if (!bwd_seen.emplace(cand.key(), word).second) continue;
          if (auto hit = fwd_seen.find(cand.key()); hit != fwd_seen.end())
            return stitch(hit->second, word);
          next.push_back({std::move(cand), std::move(word)});
        }
      bwd_layer = std::move(next);
    }
  }
  return std::nullopt;
}

}  // namespace graphprod
