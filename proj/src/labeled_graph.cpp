#include "graphprod/labeled_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace graphprod {

std::vector<std::string> validate(const RawGraph& raw) {
  std::vector<std::string> problems;
  if (raw.vertices.size() > 64)
    problems.push_back("graph has more than 64 vertices");
  std::set<std::string> seen;
  for (const auto& [name, order] : raw.vertices) {
    if (name.empty()) problems.push_back("empty vertex name");
    if (!seen.insert(name).second)
      problems.push_back("duplicate vertex '" + name + "'");
    if (order.is_finite() && !is_prime_power(order.n))
      problems.push_back("order " + std::to_string(order.n) + " of vertex '" +
                         name + "' is not a prime power");
  }
  std::set<std::pair<std::string, std::string>> edge_seen;
  for (const auto& [a, b] : raw.edges) {
    if (a == b) {
      problems.push_back("self-loop at vertex '" + a + "'");
      continue;
    }
    if (!seen.count(a)) problems.push_back("edge endpoint '" + a + "' is not a vertex");
    if (!seen.count(b)) problems.push_back("edge endpoint '" + b + "' is not a vertex");
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    if (!edge_seen.insert(key).second)
      problems.push_back("duplicate edge {" + a + "," + b + "}");
  }
  return problems;
}

LabeledGraph::LabeledGraph(RawGraph raw) {
  auto problems = validate(raw);
  if (!problems.empty()) {
    std::string msg = "invalid graph:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(msg);
  }
  for (auto& [name, order] : raw.vertices) {
    names_.push_back(name);
    orders_.push_back(order);
  }
  adj_.assign(names_.size(), {});
  rebuild_index();
  for (const auto& [a, b] : raw.edges) {
    int x = index_.at(a), y = index_.at(b);
    adj_[x].add(y);
    adj_[y].add(x);
  }
}

void LabeledGraph::rebuild_index() {
  index_.clear();
  for (int i = 0; i < vertex_count(); ++i) index_[names_[i]] = i;
}

int LabeledGraph::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error("unknown vertex '" + name + "'");
  return it->second;
}

int LabeledGraph::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

VertexSet LabeledGraph::star(int v) const {
  VertexSet s = adj_[v];
  s.add(v);
  return s;
}

VertexSet LabeledGraph::link_of_set(VertexSet s) const {
  VertexSet out = vertices();  // empty intersection convention
  for (int v : s.members()) out = out & link(v);
  return out;
}

VertexSet LabeledGraph::star_of_set(VertexSet s) const {
  VertexSet out = vertices();
  for (int v : s.members()) out = out & star(v);
  return out;
}

LabeledGraph LabeledGraph::complement() const {
  LabeledGraph g;
  g.names_ = names_;
  g.orders_ = orders_;
  g.adj_.assign(names_.size(), {});
  for (int x = 0; x < vertex_count(); ++x)
    for (int y = x + 1; y < vertex_count(); ++y)
      if (!adjacent(x, y)) {
        g.adj_[x].add(y);
        g.adj_[y].add(x);
      }
  g.rebuild_index();
  return g;
}

LabeledGraph LabeledGraph::induced_subgraph(VertexSet keep) const {
  LabeledGraph g;
  std::vector<int> old_of;
  for (int v : keep.members()) {
    g.names_.push_back(names_[v]);
    g.orders_.push_back(orders_[v]);
    old_of.push_back(v);
  }
  int n = static_cast<int>(old_of.size());
  g.adj_.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (adjacent(old_of[i], old_of[j])) {
        g.adj_[i].add(j);
        g.adj_[j].add(i);
      }
  g.rebuild_index();
  return g;
}

std::vector<VertexSet> LabeledGraph::components_of(VertexSet universe) const {
  std::vector<VertexSet> out;
  VertexSet left = universe;
  for (int seed = 0; seed < vertex_count(); ++seed) {
    if (!left.contains(seed)) continue;
    VertexSet comp = VertexSet::single(seed);
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : (link(v) & left).members())
        if (!comp.contains(w)) {
          comp.add(w);
          stack.push_back(w);
        }
    }
    left = left - comp;
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> LabeledGraph::components_minus_star(int v) const {
  if (v < 0 || v >= vertex_count()) throw Error("vertex index out of range");
  return components_of(vertices() - star(v));
}

bool LabeledGraph::dominates(int x, int y) const {
  return link(x).subset_of(star(y));
}

bool LabeledGraph::dominates_strongly(int x, int y) const {
  return star(x).subset_of(star(y));
}

VertexSet LabeledGraph::equivalence_class(int x) const {
  VertexSet out;
  for (int y = 0; y < vertex_count(); ++y)
    if (dominates(x, y) && dominates(y, x)) out.add(y);
  return out;
}

VertexSet LabeledGraph::strong_class(int x) const {
  VertexSet out;
  for (int y = 0; y < vertex_count(); ++y)
    if (dominates_strongly(x, y) && dominates_strongly(y, x)) out.add(y);
  return out;
}

VertexSet LabeledGraph::gamma_v(int v) const {
  VertexSet out;
  for (int x = 0; x < vertex_count(); ++x)
    if (dominates(v, x)) out.add(x);
  return out;
}

VertexSet LabeledGraph::omega_v(int v) const { return gamma_v(v) - link(v); }

namespace {

// Per-vertex fingerprint used to prune the automorphism search.
struct VertexShape {
  Order order;
  int degree;
  std::vector<std::pair<std::int64_t, int>> neighbor_shape;

  bool operator==(const VertexShape&) const = default;
};

VertexShape shape_of(const LabeledGraph& g, int v) {
  VertexShape s{g.order(v), g.link(v).size(), {}};
  for (int w : g.link(v).members())
    s.neighbor_shape.emplace_back(g.order(w).n, g.link(w).size());
  std::sort(s.neighbor_shape.begin(), s.neighbor_shape.end());
  return s;
}

void search_autos(const LabeledGraph& g, std::vector<int>& img,
                  std::vector<bool>& used,
                  const std::vector<std::vector<int>>& candidates, int depth,
                  std::vector<GraphAutomorphism>& out) {
  int n = g.vertex_count();
  if (depth == n) {
    out.push_back(img);
    return;
  }
  for (int c : candidates[depth]) {
    if (used[c]) continue;
    bool ok = true;
    for (int prev = 0; prev < depth && ok; ++prev)
      if (g.adjacent(depth, prev) != g.adjacent(c, img[prev])) ok = false;
    if (!ok) continue;
    img[depth] = c;
    used[c] = true;
    search_autos(g, img, used, candidates, depth + 1, out);
    used[c] = false;
  }
}

}  // namespace

std::vector<GraphAutomorphism> LabeledGraph::labeled_automorphisms() const {
  int n = vertex_count();
  std::vector<VertexShape> shapes;
  shapes.reserve(n);
  for (int v = 0; v < n; ++v) shapes.push_back(shape_of(*this, v));
  std::vector<std::vector<int>> candidates(n);
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < n; ++c)
      if (shapes[v] == shapes[c]) candidates[v].push_back(c);
  std::vector<GraphAutomorphism> out;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  search_autos(*this, img, used, candidates, 0, out);
  return out;  // lexicographic enumeration puts identity first
}

namespace {

void bron_kerbosch(const LabeledGraph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  for (int v : p.members()) {
    VertexSet rv = r;
    rv.add(v);
    bron_kerbosch(g, rv, p & g.link(v), x & g.link(v), out);
    p.remove(v);
    x.add(v);
  }
}

}  // namespace

std::vector<VertexSet> LabeledGraph::maximal_cliques() const {
  std::vector<VertexSet> out;
  bron_kerbosch(*this, {}, vertices(), {}, out);
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.members() < b.members(); });
  return out;
}

RawGraph LabeledGraph::to_raw() const {
  RawGraph raw;
  for (int v = 0; v < vertex_count(); ++v)
    raw.vertices.emplace_back(names_[v], orders_[v]);
  for (int x = 0; x < vertex_count(); ++x)
    for (int y = x + 1; y < vertex_count(); ++y)
      if (adjacent(x, y)) raw.edges.emplace_back(names_[x], names_[y]);
  return raw;
}

bool LabeledGraph::same_structure(const LabeledGraph& o) const {
  return names_ == o.names_ && orders_ == o.orders_ && adj_ == o.adj_;
}

LabeledGraph join(const LabeledGraph& g1, const LabeledGraph& g2) {
  RawGraph raw = g1.to_raw();
  RawGraph raw2 = g2.to_raw();
  for (const auto& v : raw2.vertices) raw.vertices.push_back(v);
  for (const auto& e : raw2.edges) raw.edges.push_back(e);
  for (int x = 0; x < g1.vertex_count(); ++x)
    for (int y = 0; y < g2.vertex_count(); ++y)
      raw.edges.emplace_back(g1.name(x), g2.name(y));
  return LabeledGraph(std::move(raw));  // ctor rejects name clashes
}

GraphRef make_graph(RawGraph raw) {
  return std::make_shared<const LabeledGraph>(std::move(raw));
}

}  // namespace graphprod
