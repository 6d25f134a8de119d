#include "graphprod/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace graphprod {

bool Ball::contains(const GroupElement& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

Ball enumerate_ball(const GraphRef& g, int radius) {
  if (radius < 0) throw Error("negative radius");
  Ball ball{radius, {GroupElement::identity(g)}};
  std::unordered_set<std::string> seen{"1"};
  std::vector<GroupElement> layer = ball.elements;
  for (int d = 1; d <= radius; ++d) {
    std::vector<GroupElement> next;
    for (const auto& cur : layer)
      for (int v = 0; v < g->vertex_count(); ++v)
        for (int sign : {1, -1}) {
          GroupElement cand = multiply(cur, GroupElement::vertex(g, v, sign));
          if (cand.length() != d) continue;
          if (seen.insert(cand.str()).second) next.push_back(cand);
        }
    ball.elements.insert(ball.elements.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  std::sort(ball.elements.begin(), ball.elements.end());
  return ball;
}

int FiniteGroupTable::index_of(const GroupElement& e) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), e);
  if (it == elements.end() || !(*it == e)) return -1;
  return static_cast<int>(it - elements.begin());
}

FiniteGroupTable enumerate_finite_group(const GraphRef& g) {
  int n = g->vertex_count();
  for (int x = 0; x < n; ++x) {
    if (!g->order(x).is_finite())
      throw Error("infinite group: vertex '" + g->name(x) + "' has infinite order");
    for (int y = x + 1; y < n; ++y)
      if (!g->adjacent(x, y))
        throw Error("infinite group: '" + g->name(x) + "' and '" + g->name(y) +
                    "' are not adjacent");
  }
  FiniteGroupTable table;
  std::vector<Syllable> word;
  // all exponent tuples
  std::vector<std::int64_t> exp(n, 0);
  for (;;) {
    word.clear();
    for (int v = 0; v < n; ++v)
      if (exp[v]) word.push_back({v, exp[v]});
    table.elements.push_back(GroupElement::from_syllables(g, word));
    int v = 0;
    while (v < n && ++exp[v] == g->order(v).n) exp[v++] = 0;
    if (v == n) break;
  }
  std::sort(table.elements.begin(), table.elements.end());
  int size = static_cast<int>(table.elements.size());
  table.product.assign(size, std::vector<int>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      int k = table.index_of(multiply(table.elements[i], table.elements[j]));
      if (k < 0) throw Error("product escaped the table (bug)");
      table.product[i][j] = k;
    }
  return table;
}

std::vector<GroupElement> brute_centralizer(const GraphRef& g,
                                            const GroupElement& elem,
                                            int radius) {
  std::vector<GroupElement> out;
  for (const auto& h : enumerate_ball(g, radius).elements)
    if (commutes(h, elem)) out.push_back(h);
  return out;
}

std::string map_key(const VertexMap& m) {
  std::string out;
  for (const auto& e : m) {
    out += e.str();
    out += '|';
  }
  return out;
}

namespace {

// Subgroup generated by `gens` inside a finite group, by index closure.
std::vector<int> generated_subgroup(const FiniteGroupTable& table,
                                    const std::vector<int>& gens) {
  std::unordered_set<int> seen;
  std::vector<int> stack;
  int id = table.index_of(GroupElement::identity(table.elements[0].graph()));
  seen.insert(id);
  stack.push_back(id);
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int gi : gens) {
      int nxt = table.product[cur][gi];
      if (seen.insert(nxt).second) stack.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

void enumerate_maps(const GraphRef& g, const FiniteGroupTable& table,
                    const std::vector<std::vector<int>>& candidates,
                    std::vector<int>& chosen, std::size_t depth,
                    std::vector<VertexMap>& out) {
  if (depth == candidates.size()) {
    VertexMap m;
    for (int idx : chosen) m.push_back(table.elements[idx]);
    if (!is_well_defined(*g, m).ok) return;
    if (generated_subgroup(table, chosen).size() != table.elements.size())
      return;  // not surjective
    out.push_back(std::move(m));
    return;
  }
  for (int c : candidates[depth]) {
    chosen.push_back(c);
    enumerate_maps(g, table, candidates, chosen, depth + 1, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<VertexMap> brute_automorphism_group(const GraphRef& g) {
  FiniteGroupTable table = enumerate_finite_group(g);
  std::vector<std::vector<int>> candidates(g->vertex_count());
  for (int v = 0; v < g->vertex_count(); ++v)
    for (std::size_t i = 0; i < table.elements.size(); ++i)
      if (order_of(table.elements[i]) == g->order(v))
        candidates[v].push_back(static_cast<int>(i));
  std::vector<VertexMap> out;
  std::vector<int> chosen;
  enumerate_maps(g, table, candidates, chosen, 0, out);
  return out;
}

ClosureResult closure(const GraphRef& g, const std::vector<Automorphism>& autos,
                      std::size_t bound) {
  ClosureResult result;
  std::unordered_set<std::string> seen;
  VertexMap id = identity_map(g);
  seen.insert(map_key(id));
  result.maps.push_back(id);
  std::vector<VertexMap> layer{id};
  while (!layer.empty()) {
    std::vector<VertexMap> next;
    for (const auto& cur : layer)
      for (const auto& a : autos) {
        VertexMap composed;
        composed.reserve(cur.size());
        for (int v = 0; v < g->vertex_count(); ++v)
          composed.push_back(apply_map(cur, a.forward()[v]));
        if (!seen.insert(map_key(composed)).second) continue;
        if (result.maps.size() >= bound) {
          result.complete = false;
          return result;
        }
        result.maps.push_back(composed);
        next.push_back(std::move(composed));
      }
    layer = std::move(next);
  }
  return result;
}

std::vector<GroupElement> subgroup_ball(const GraphRef& g,
                                        const std::vector<GroupElement>& gens,
                                        int radius) {
  std::vector<GroupElement> steps;
  for (const auto& e : gens) {
    steps.push_back(e);
    steps.push_back(invert(e));
  }
  std::vector<GroupElement> out{GroupElement::identity(g)};
  std::unordered_set<std::string> seen{"1"};
  std::vector<GroupElement> stack = out;
  while (!stack.empty()) {
    GroupElement cur = stack.back();
    stack.pop_back();
    for (const auto& s : steps) {
      GroupElement nxt = multiply(cur, s);
      if (nxt.length() > radius) continue;
      if (seen.insert(nxt.str()).second) {
        out.push_back(nxt);
        stack.push_back(nxt);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace graphprod
