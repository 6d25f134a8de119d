#include "graphprod/words.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace graphprod {

namespace {

void require_same_graph(const GroupElement& a, const GroupElement& b) {
  if (a.graph() != b.graph())
    throw Error("elements belong to different graphs");
}

// Fold an exponent into the stored range; 0 means the syllable vanishes.
std::int64_t fold_exponent(const LabeledGraph& g, int v, std::int64_t e) {
  Order o = g.order(v);
  if (!o.is_finite()) return e;
  e %= o.n;
  if (e < 0) e += o.n;
  return e;
}

// Merge fixpoint: two syllables of the same vertex merge whenever only
// syllables commuting with that vertex separate them.
void reduce(const LabeledGraph& g, std::vector<Syllable>& syl) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < syl.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < syl.size(); ++j) {
        if (syl[j].vertex == syl[i].vertex) {
          std::int64_t e =
              fold_exponent(g, syl[i].vertex, syl[i].exponent + syl[j].exponent);
          syl.erase(syl.begin() + j);
          if (e == 0)
            syl.erase(syl.begin() + i);
          else
            syl[i].exponent = e;
          changed = true;
          break;
        }
        if (!g.adjacent(syl[i].vertex, syl[j].vertex)) break;
      }
    }
  }
}

// Left-greedy canonical shuffle: repeatedly emit the least vertex whose
// syllable commutes past everything before it.
void canonicalize(const LabeledGraph& g, std::vector<Syllable>& syl) {
  std::vector<Syllable> out;
  out.reserve(syl.size());
  while (!syl.empty()) {
    int best = -1;
    for (std::size_t i = 0; i < syl.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j)
        if (!g.adjacent(syl[j].vertex, syl[i].vertex)) movable = false;
      if (movable && (best < 0 || syl[i].vertex < syl[best].vertex))
        best = static_cast<int>(i);
    }
    out.push_back(syl[best]);
    syl.erase(syl.begin() + best);
  }
  syl = std::move(out);
}

}  // namespace

std::int64_t syllable_length(const LabeledGraph& g, const Syllable& s) {
  Order o = g.order(s.vertex);
  if (!o.is_finite()) return s.exponent < 0 ? -s.exponent : s.exponent;
  return std::min(s.exponent, o.n - s.exponent);
}

GroupElement GroupElement::identity(GraphRef g) { return GroupElement(std::move(g)); }

GroupElement GroupElement::from_syllables(GraphRef g, std::vector<Syllable> raw) {
  GroupElement e(g);
  std::vector<Syllable> syl;
  for (auto& s : raw) {
    if (s.vertex < 0 || s.vertex >= g->vertex_count())
      throw Error("syllable vertex out of range");
    std::int64_t folded = fold_exponent(*g, s.vertex, s.exponent);
    if (folded != 0) syl.push_back({s.vertex, folded});
  }
  reduce(*g, syl);
  canonicalize(*g, syl);
  e.syllables_ = std::move(syl);
  return e;
}

GroupElement GroupElement::vertex(GraphRef g, int v, std::int64_t e) {
  return from_syllables(std::move(g), {{v, e}});
}

std::int64_t GroupElement::length() const {
  std::int64_t total = 0;
  for (const auto& s : syllables_) total += syllable_length(*graph_, s);
  return total;
}

VertexSet GroupElement::support() const {
  VertexSet out;
  for (const auto& s : syllables_) out.add(s.vertex);
  return out;
}

std::string GroupElement::str() const {
  if (syllables_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syllables_) {
    if (!first) os << ' ';
    first = false;
    os << graph_->name(s.vertex);
    if (s.exponent != 1) os << '^' << s.exponent;
  }
  return os.str();
}

bool GroupElement::operator==(const GroupElement& o) const {
  return graph_ == o.graph_ && syllables_ == o.syllables_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  std::int64_t la = length(), lb = o.length();
  if (la != lb) return la < lb;
  auto key = [](const Syllable& s) { return std::make_pair(s.vertex, s.exponent); };
  return std::lexicographical_compare(
      syllables_.begin(), syllables_.end(), o.syllables_.begin(),
      o.syllables_.end(),
      [&](const Syllable& a, const Syllable& b) { return key(a) < key(b); });
}

std::vector<Syllable> parse_word(const LabeledGraph& g, const std::string& text) {
  std::vector<Syllable> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;  // identity factor
    std::string name = tok;
    std::int64_t e = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      name = tok.substr(0, caret);
      std::string num = tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        e = std::stoll(num, &used);
        if (used != num.size()) throw Error("bad exponent");
      } catch (const std::exception&) {
        throw Error("malformed token '" + tok + "'");
      }
    }
    if (e == 0) throw Error("zero exponent in token '" + tok + "'");
    int v = g.find(name);
    if (v < 0) throw Error("unknown vertex '" + name + "'");
    out.push_back({v, e});
  }
  return out;
}

GroupElement parse_element(GraphRef g, const std::string& text) {
  auto raw = parse_word(*g, text);
  return GroupElement::from_syllables(std::move(g), std::move(raw));
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same_graph(a, b);
  std::vector<Syllable> syl = a.syllables();
  syl.insert(syl.end(), b.syllables().begin(), b.syllables().end());
  return GroupElement::from_syllables(a.graph(), std::move(syl));
}

GroupElement invert(const GroupElement& a) {
  std::vector<Syllable> syl(a.syllables().rbegin(), a.syllables().rend());
  for (auto& s : syl) s.exponent = -s.exponent;
  return GroupElement::from_syllables(a.graph(), std::move(syl));
}

GroupElement power(const GroupElement& a, std::int64_t n) {
  if (n < 0) return power(invert(a), -n);
  GroupElement acc = GroupElement::identity(a.graph());
  GroupElement base = a;
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return acc;
}

GroupElement conjugate(const GroupElement& by, const GroupElement& g) {
  return multiply(multiply(by, g), invert(by));
}

bool commutes(const GroupElement& a, const GroupElement& b) {
  require_same_graph(a, b);
  return multiply(a, b) == multiply(b, a);
}

namespace {

GroupElement letter(const GraphRef& g, int v, int sign) {
  return GroupElement::vertex(g, v, sign);
}

// One peeling step: a single-letter conjugation that strictly shortens,
// searched over the plateau of equal-length conjugates so that local
// plateaus cannot hide a shorter form. Yields the accumulated conjugator
// d and the shorter element h = d u d^-1.
struct PeelStep {
  GroupElement conj;
  GroupElement result;
};

std::optional<PeelStep> peel_once(const GroupElement& u) {
  const GraphRef& g = u.graph();
  std::int64_t len = u.length();
  std::deque<std::pair<GroupElement, GroupElement>> queue;  // (q, c): q = c u c^-1
  std::unordered_set<std::string> seen{u.str()};
  queue.emplace_back(u, GroupElement::identity(g));
  std::size_t visited = 0;
  while (!queue.empty()) {
    auto [q, c] = queue.front();
    queue.pop_front();
    if (++visited > 200000) throw Error("cyclic reduction plateau too large");
    for (int v = 0; v < g->vertex_count(); ++v) {
      if (!q.support().contains(v)) continue;
      for (int sign : {1, -1}) {
        GroupElement x = letter(g, v, sign);
        GroupElement h = conjugate(x, q);
        std::int64_t hl = h.length();
        if (hl < len) return PeelStep{multiply(x, c), h};
        if (hl == len && seen.insert(h.str()).second)
          queue.emplace_back(h, multiply(x, c));
      }
    }
  }
  return std::nullopt;
}

}  // namespace

CyclicReduction cyclically_reduce(const GroupElement& g) {
  GroupElement w = GroupElement::identity(g.graph());
  GroupElement u = g;
  while (auto step = peel_once(u)) {
    w = multiply(w, invert(step->conj));
    u = step->result;
  }
  return {w, u};
}

bool is_cyclically_reduced(const GroupElement& g) {
  return !peel_once(g).has_value();
}

VertexSet cyclic_support(const GroupElement& g) {
  return cyclically_reduce(g).core.support();
}

Order order_of(const GroupElement& g) {
  if (g.is_identity()) return Order::finite(1);
  GroupElement u = cyclically_reduce(g).core;
  const LabeledGraph& graph = *g.graph();
  auto supp = u.support().members();
  for (std::size_t i = 0; i < supp.size(); ++i) {
    if (!graph.order(supp[i]).is_finite()) return Order::inf();
    for (std::size_t j = i + 1; j < supp.size(); ++j)
      if (!graph.adjacent(supp[i], supp[j])) return Order::inf();
  }
  // abelian tuple of finite cyclic factors
  std::int64_t ord = 1;
  for (const auto& s : u.syllables()) {
    std::int64_t o = graph.order(s.vertex).n;
    ord = lcm64(ord, o / gcd64(s.exponent, o));
  }
  return Order::finite(ord);
}

Reduction reduction_type(const GroupElement& u, int vertex, int sign) {
  const GraphRef& g = u.graph();
  if (vertex < 0 || vertex >= g->vertex_count())
    throw Error("vertex index out of range");
  GroupElement x = letter(g, vertex, sign);
  GroupElement h = conjugate(x, u);
  std::int64_t ul = u.length(), hl = h.length();
  if (hl < ul) return {0, h};
  bool commutes_all = true;
  for (int z : u.support().members())
    if (z != vertex && !g->adjacent(z, vertex)) commutes_all = false;
  if (commutes_all) return {1, h};
  if (multiply(x, u).length() == ul - 1 && hl == ul) return {2, h};
  if (multiply(u, invert(x)).length() == ul - 1 && hl == ul) return {3, h};
  return {4, h};
}

namespace {

struct DecompositionSearch {
  const GraphRef& g;
  std::unordered_set<std::string> dead;  // (remaining.str, phase) failures
  std::vector<std::pair<Syllable, int>> picked;  // (letter, type)

  bool run(const GroupElement& remaining, const GroupElement& u_cur, int phase) {
    if (remaining.is_identity()) return true;
    std::string memo = remaining.str() + "#" + std::to_string(phase);
    if (dead.count(memo)) return false;
    std::int64_t len = remaining.length();
    for (int v = 0; v < g->vertex_count(); ++v) {
      if (!remaining.support().contains(v)) continue;
      for (int sign : {1, -1}) {
        GroupElement x = letter(g, v, sign);
        // x is a last letter of `remaining` iff stripping it shortens by 1
        GroupElement rest = multiply(remaining, invert(x));
        if (rest.length() != len - 1) continue;
        Reduction r = reduction_type(u_cur, v, sign);
        if (r.type < phase || r.type == 0) continue;
        picked.push_back({{v, sign}, r.type});
        if (run(rest, r.result, r.type)) return true;
        picked.pop_back();
      }
    }
    dead.insert(memo);
    return false;
  }
};

}  // namespace

ConjugationDecomposition conjugation_decomposition(const GroupElement& u,
                                                   const GroupElement& w) {
  require_same_graph(u, w);
  if (!is_cyclically_reduced(u))
    throw Error("conjugation_decomposition requires a cyclically reduced u");
  const GraphRef& g = u.graph();
  DecompositionSearch search{g, {}, {}};
  if (!search.run(w, u, 1))
    throw Error("no type-ordered rearrangement found (unexpected)");
  ConjugationDecomposition d{
      GroupElement::identity(g), GroupElement::identity(g),
      GroupElement::identity(g), GroupElement::identity(g)};
  for (const auto& [syl, type] : search.picked) {
    GroupElement x = letter(g, syl.vertex, static_cast<int>(syl.exponent));
    GroupElement* bucket = type == 1   ? &d.w1
                           : type == 2 ? &d.w2
                           : type == 3 ? &d.w3
                                       : &d.w4;
    *bucket = multiply(x, *bucket);
  }
  if (multiply(multiply(d.w4, d.w3), multiply(d.w2, d.w1)) != w)
    throw Error("decomposition does not recompose (bug)");
  return d;
}

}  // namespace graphprod
