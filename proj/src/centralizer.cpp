#include "graphprod/centralizer.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace graphprod {

namespace {

// Solve a*n = e (mod o), smallest positive a; -1 when unsolvable.
std::int64_t solve_power(std::int64_t n, std::int64_t e, std::int64_t o) {
  std::int64_t d = gcd64(n, o);
  if (e % d != 0) return -1;
  // extended euclid for inverse of n/d mod o/d
  std::int64_t m = o / d, nn = (n / d) % m, x0 = 0, x1 = 1, a = m, b = nn;
  while (b) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  std::int64_t inv = ((x0 % m) + m) % m;  // a == gcd(m, nn) == 1 here
  std::int64_t sol = (e / d) % m * inv % m;
  if (sol == 0) sol = m;
  return sol;
}

// Components of the support in the complement graph, ordered by least
// vertex.
std::vector<VertexSet> complement_components(const LabeledGraph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  for (int seed = 0; seed < g.vertex_count(); ++seed) {
    if (!left.contains(seed)) continue;
    VertexSet comp = VertexSet::single(seed);
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : left.members())
        if (!comp.contains(w) && w != v && !g.adjacent(v, w)) {
          comp.add(w);
          stack.push_back(w);
        }
    }
    left = left - comp;
    out.push_back(comp);
  }
  return out;
}

// Root of a factor whose support spans >= 2 vertices and is connected in
// the complement (so the factor has infinite order and a unique maximal
// root). Shortest-first search over the subgroup generated by the
// support; the first element with some power equal to p is the
// primitive root.
std::pair<GroupElement, std::int64_t> multi_vertex_root(const GroupElement& p) {
  const GraphRef& g = p.graph();
  VertexSet s = p.support();
  std::int64_t plen = p.length();
  std::vector<GroupElement> layer{GroupElement::identity(g)};
  std::unordered_set<std::string> seen{layer[0].str()};
  for (std::int64_t radius = 1; radius < plen; ++radius) {
    std::vector<GroupElement> next;
    for (const auto& cur : layer)
      for (int v : s.members())
        for (int sign : {1, -1}) {
          GroupElement cand = multiply(cur, GroupElement::vertex(g, v, sign));
          if (cand.length() != radius) continue;
          if (seen.insert(cand.str()).second) next.push_back(cand);
        }
    std::sort(next.begin(), next.end());
    for (const auto& r : next) {
      if (r.support() != s) continue;
      if (!commutes(r, p)) continue;
      GroupElement pw = r;
      for (std::int64_t k = 2; k <= plen; ++k) {
        pw = multiply(pw, r);
        if (pw == p) return {r, k};
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return {p, 1};
}

bool link_has_torsion_dividing(const LabeledGraph& g, VertexSet link,
                               std::int64_t n) {
  for (int z : link.members()) {
    Order o = g.order(z);
    if (o.is_finite() && gcd64(o.n, n) > 1) return true;
  }
  return false;
}

}  // namespace

BasicForm basic_form(const GroupElement& u) {
  if (u.is_identity()) throw Error("basic form of the identity");
  if (!is_cyclically_reduced(u))
    throw Error("basic form requires a cyclically reduced element");
  const GraphRef& g = u.graph();
  VertexSet s = u.support();
  BasicForm bf;
  bf.link = g->link_of_set(s);
  for (VertexSet comp : complement_components(*g, s)) {
    std::vector<Syllable> part;
    for (const auto& syl : u.syllables())
      if (comp.contains(syl.vertex)) part.push_back(syl);
    GroupElement p = GroupElement::from_syllables(g, std::move(part));
    if (comp.size() == 1) {
      int v = comp.members()[0];
      std::int64_t e = p.syllables()[0].exponent;
      if (g->order(v).is_finite())
        bf.factors.push_back({GroupElement::vertex(g, v), e});
      else
        bf.factors.push_back(
            {GroupElement::vertex(g, v, e < 0 ? -1 : 1), e < 0 ? -e : e});
    } else {
      auto [r, n] = multi_vertex_root(p);
      bf.factors.push_back({r, n});
    }
  }
  GroupElement rebuilt = GroupElement::identity(g);
  for (const auto& f : bf.factors)
    rebuilt = multiply(rebuilt, power(f.root, f.exponent));
  if (rebuilt != u) throw Error("basic form does not recompose (bug)");
  return bf;
}

RootResult root(const GroupElement& g) {
  if (g.is_identity()) throw Error("root of the identity");
  const GraphRef& graph = g.graph();
  auto [w, u] = cyclically_reduce(g);
  BasicForm bf = basic_form(u);
  Order ou = order_of(u);
  auto conj_back = [&](const GroupElement& r) {
    return w.is_identity() ? r : conjugate(w, r);
  };

  if (ou.is_finite()) {
    // every factor is a single finite-order vertex
    for (std::int64_t n = ou.n - 1; n >= 1; --n) {
      GroupElement r = GroupElement::identity(graph);
      bool ok = true, unique = true;
      for (const auto& f : bf.factors) {
        int v = f.root.syllables()[0].vertex;
        std::int64_t o = graph->order(v).n;
        std::int64_t a = solve_power(n, f.exponent, o);
        if (a < 0) {
          ok = false;
          break;
        }
        if (gcd64(n, o) > 1) unique = false;
        r = multiply(r, GroupElement::vertex(graph, v, a));
      }
      if (!ok) continue;
      if (n > 1 && link_has_torsion_dividing(*graph, bf.link, n)) unique = false;
      return {conj_back(r), n, unique};
    }
    throw Error("unreachable: n = 1 always solves");
  }

  std::int64_t g_exp = 0;  // gcd of exponents of infinite-order factors
  for (const auto& f : bf.factors)
    if (!order_of(f.root).is_finite()) g_exp = gcd64(g_exp, f.exponent);
  for (std::int64_t n = g_exp; n >= 1; --n) {
    if (g_exp % n != 0) continue;
    GroupElement r = GroupElement::identity(graph);
    bool ok = true, unique = true;
    for (const auto& f : bf.factors) {
      if (!order_of(f.root).is_finite()) {
        r = multiply(r, power(f.root, f.exponent / n));
        continue;
      }
      int v = f.root.syllables()[0].vertex;
      std::int64_t o = graph->order(v).n;
      std::int64_t a = solve_power(n, f.exponent, o);
      if (a < 0) {
        ok = false;
        break;
      }
      if (gcd64(n, o) > 1) unique = false;
      r = multiply(r, GroupElement::vertex(graph, v, a));
    }
    if (!ok) continue;
    if (n > 1 && link_has_torsion_dividing(*graph, bf.link, n)) unique = false;
    return {conj_back(r), n, unique};
  }
  throw Error("unreachable: n = 1 always solves");
}

std::vector<GroupElement> CentralizerPresentation::generators() const {
  std::vector<GroupElement> out;
  for (const auto& f : factors)
    out.push_back(conjugator.is_identity() ? f : conjugate(conjugator, f));
  const GraphRef& g = conjugator.graph();
  for (int z : link.members()) {
    GroupElement zel = GroupElement::vertex(g, z);
    out.push_back(conjugator.is_identity() ? zel : conjugate(conjugator, zel));
  }
  return out;
}

CentralizerPresentation centralizer(const GroupElement& g) {
  const GraphRef& graph = g.graph();
  if (g.is_identity())
    return {true, GroupElement::identity(graph), {}, graph->vertices(), {}};
  auto [w, u] = cyclically_reduce(g);
  BasicForm bf = basic_form(u);
  CentralizerPresentation pres{false, w, {}, bf.link, bf};
  for (const auto& f : bf.factors) {
    if (f.root.support().size() == 1) {
      // a cyclic vertex group: emit the vertex itself, which generates
      // the whole factor (covers non-generator powers like v^2 in Z_4)
      int v = f.root.syllables()[0].vertex;
      pres.factors.push_back(GroupElement::vertex(graph, v));
    } else {
      pres.factors.push_back(f.root);
    }
  }
  for (const auto& gen : pres.generators())
    if (!commutes(gen, g))
      throw Error("centralizer generator does not commute (bug)");
  return pres;
}

CentralizerGraph centralizer_graph(const GroupElement& u) {
  const GraphRef& g = u.graph();
  if (!u.is_identity() && !is_cyclically_reduced(u))
    throw Error("centralizer graph requires a cyclically reduced element");
  std::vector<GroupElement> factors;
  VertexSet link = g->vertices();
  if (!u.is_identity()) {
    CentralizerPresentation pres = centralizer(u);
    factors = pres.factors;
    link = pres.link;
  }
  RawGraph raw;
  std::vector<std::string> fresh;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Order o = order_of(factors[i]);
    if (o.is_finite() && factors[i].support().size() != 1)
      throw Error("finite-order factor with several vertices (bug)");
    std::string name = "x" + std::to_string(i + 1);
    while (g->find(name) >= 0) name.insert(name.begin(), '_');
    fresh.push_back(name);
    raw.vertices.emplace_back(name, o);
  }
  for (int z : link.members()) raw.vertices.emplace_back(g->name(z), g->order(z));
  for (std::size_t i = 0; i < fresh.size(); ++i)
    for (std::size_t j = i + 1; j < fresh.size(); ++j)
      raw.edges.emplace_back(fresh[i], fresh[j]);
  for (std::size_t i = 0; i < fresh.size(); ++i)
    for (int z : link.members()) raw.edges.emplace_back(fresh[i], g->name(z));
  auto lv = link.members();
  for (std::size_t i = 0; i < lv.size(); ++i)
    for (std::size_t j = i + 1; j < lv.size(); ++j)
      if (g->adjacent(lv[i], lv[j]))
        raw.edges.emplace_back(g->name(lv[i]), g->name(lv[j]));
  return {LabeledGraph(std::move(raw)), static_cast<int>(fresh.size())};
}

int rank(const GroupElement& g) {
  const GraphRef& graph = g.graph();
  if (g.is_identity()) return graph->vertex_count();
  GroupElement u = cyclically_reduce(g).core;
  BasicForm bf = basic_form(u);
  return static_cast<int>(bf.factors.size()) + bf.link.size();
}

}  // namespace graphprod
