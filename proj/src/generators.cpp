#include "graphprod/generators.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace graphprod {

namespace {

std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

// Smallest positive m' with m * m' = 1 (mod o).
std::int64_t mod_inverse(std::int64_t m, std::int64_t o) {
  std::int64_t x0 = 0, x1 = 1, a = o, b = ((m % o) + o) % o;
  while (b) {
    std::int64_t q = a / b, t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return ((x0 % o) + o) % o;
}

VertexMap fixed_except(const GraphRef& g, int v, const GroupElement& image) {
  VertexMap m = identity_map(g);
  m[v] = image;
  return m;
}

}  // namespace

std::string describe(const LabeledGraph& g, const GeneratorDescriptor& d) {
  std::ostringstream os;
  if (const auto* ga = std::get_if<GraphAutDesc>(&d)) {
    os << "graph_aut(";
    bool first = true;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (ga->mapping[v] == v) continue;
      if (!first) os << ", ";
      first = false;
      os << g.name(v) << "->" << g.name(ga->mapping[v]);
    }
    if (first) os << "id";
    os << ")";
  } else if (const auto* f = std::get_if<FactorDesc>(&d)) {
    os << "phi[" << g.name(f->vertex) << "^" << f->m << "]";
  } else if (const auto* t = std::get_if<TransvectionDesc>(&d)) {
    os << "tau[" << g.name(t->x) << " -> " << g.name(t->x) << " "
       << g.name(t->y);
    if (t->q != 1) os << "^" << t->q;
    os << "]";
  } else if (const auto* p = std::get_if<PartialConjDesc>(&d)) {
    os << "sigma[" << g.name(p->vertex) << "; {";
    bool first = true;
    for (int z : p->component.members()) {
      if (!first) os << ",";
      first = false;
      os << g.name(z);
    }
    os << "}]";
  } else if (const auto* in = std::get_if<InnerDesc>(&d)) {
    os << "inner[" << in->word << "]";
  } else if (const auto* w = std::get_if<WhiteheadDesc>(&d)) {
    os << "W[a=" << g.name(w->a.vertex) << "^" << w->a.exponent << "; A={";
    bool first = true;
    for (const auto& l : w->letters) {
      if (!first) os << ",";
      first = false;
      os << g.name(l.vertex) << "^" << l.exponent;
    }
    os << "}]";
  }
  return os.str();
}

std::vector<Generator> factor_automorphisms(const GraphRef& g) {
  std::vector<Generator> out;
  for (int v = 0; v < g->vertex_count(); ++v) {
    Order o = g->order(v);
    if (!o.is_finite()) {
      VertexMap m = fixed_except(g, v, GroupElement::vertex(g, v, -1));
      out.push_back({FactorDesc{v, -1}, {}, Automorphism(g, m, m)});
      continue;
    }
    for (std::int64_t m = 2; m < o.n; ++m) {
      if (gcd64(m, o.n) != 1) continue;
      VertexMap fwd = fixed_except(g, v, GroupElement::vertex(g, v, m));
      VertexMap inv =
          fixed_except(g, v, GroupElement::vertex(g, v, mod_inverse(m, o.n)));
      out.push_back({FactorDesc{v, m}, {}, Automorphism(g, fwd, inv)});
    }
  }
  return out;
}

std::optional<Generator> transvection(const GraphRef& g, int x, int y) {
  if (x == y) throw Error("transvection requires distinct vertices");
  Order ox = g->order(x), oy = g->order(y);
  std::int64_t q = 1;
  if (!ox.is_finite()) {
    if (!g->dominates(x, y)) return std::nullopt;
  } else {
    if (!g->dominates_strongly(x, y)) return std::nullopt;
    if (!oy.is_finite()) return std::nullopt;
    std::int64_t p = smallest_prime_factor(ox.n);
    if (smallest_prime_factor(oy.n) != p) return std::nullopt;
    if (oy.n > ox.n) q = oy.n / ox.n;  // p^(k-j), the smallest valid power
  }
  GroupElement ximg =
      multiply(GroupElement::vertex(g, x), GroupElement::vertex(g, y, q));
  GroupElement xinv =
      multiply(GroupElement::vertex(g, x), GroupElement::vertex(g, y, -q));
  return Generator{TransvectionDesc{x, y, q},
                   {},
                   Automorphism(g, fixed_except(g, x, ximg),
                                fixed_except(g, x, xinv))};
}

std::vector<Generator> partial_conjugations(const GraphRef& g) {
  std::vector<Generator> out;
  for (int v = 0; v < g->vertex_count(); ++v) {
    auto comps = g->components_minus_star(v);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      VertexMap fwd = identity_map(g);
      VertexMap inv = identity_map(g);
      GroupElement conj = GroupElement::vertex(g, v);
      for (int z : comps[i].members()) {
        fwd[z] = conjugate(conj, GroupElement::vertex(g, z));
        inv[z] = conjugate(invert(conj), GroupElement::vertex(g, z));
      }
      out.push_back({PartialConjDesc{v, static_cast<int>(i), comps[i]},
                     {},
                     Automorphism(g, fwd, inv)});
    }
  }
  return out;
}

Generator graph_automorphism_lift(const GraphRef& g,
                                  const GraphAutomorphism& gamma) {
  int n = g->vertex_count();
  GraphAutomorphism gamma_inv(n);
  for (int v = 0; v < n; ++v) gamma_inv[gamma[v]] = v;
  VertexMap fwd, inv;
  for (int v = 0; v < n; ++v) {
    fwd.push_back(GroupElement::vertex(g, gamma[v]));
    inv.push_back(GroupElement::vertex(g, gamma_inv[v]));
  }
  return {GraphAutDesc{gamma}, {}, Automorphism(g, fwd, inv)};
}

Automorphism inner_automorphism(const GroupElement& w) {
  const GraphRef& g = w.graph();
  VertexMap fwd, inv;
  for (int v = 0; v < g->vertex_count(); ++v) {
    fwd.push_back(conjugate(w, GroupElement::vertex(g, v)));
    inv.push_back(conjugate(invert(w), GroupElement::vertex(g, v)));
  }
  return Automorphism(g, fwd, inv);
}

namespace {

enum class Families {
  kAll,
  kStar,  // transvections restricted to adjacent pairs
  kOne,   // star minus partial conjugations
};

std::vector<Generator> assemble(const GraphRef& g, Families which) {
  std::vector<Generator> out;
  std::unordered_map<std::string, std::size_t> by_key;
  auto push = [&](Generator gen) {
    std::string key = gen.aut.key();
    if (key == Automorphism::identity(g).key()) return;
    if (auto it = by_key.find(key); it != by_key.end()) {
      out[it->second].aliases.push_back(gen.desc);
      return;
    }
    by_key[key] = out.size();
    out.push_back(std::move(gen));
  };

  for (const auto& gamma : g->labeled_automorphisms())
    push(graph_automorphism_lift(g, gamma));
  for (auto& gen : factor_automorphisms(g)) push(std::move(gen));
  for (int x = 0; x < g->vertex_count(); ++x)
    for (int y = 0; y < g->vertex_count(); ++y) {
      if (x == y) continue;
      if (which != Families::kAll && !g->adjacent(x, y)) continue;
      if (auto t = transvection(g, x, y)) push(std::move(*t));
    }
  if (which != Families::kOne)
    for (auto& gen : partial_conjugations(g)) push(std::move(gen));
  return out;
}

}  // namespace

std::vector<Generator> generating_set(const GraphRef& g) {
  return assemble(g, Families::kAll);
}

std::vector<Generator> star_generating_set(const GraphRef& g) {
  return assemble(g, Families::kStar);
}

std::vector<Generator> subgroup_one_set(const GraphRef& g) {
  return assemble(g, Families::kOne);
}

std::vector<Generator> whitehead_type_I(const GraphRef& g) {
  std::vector<Generator> out;
  std::unordered_map<std::string, std::size_t> by_key;
  auto push = [&](Generator gen) {
    std::string key = gen.aut.key();
    if (key == Automorphism::identity(g).key()) return;
    if (auto it = by_key.find(key); it != by_key.end()) {
      out[it->second].aliases.push_back(gen.desc);
      return;
    }
    by_key[key] = out.size();
    out.push_back(std::move(gen));
  };
  for (const auto& gamma : g->labeled_automorphisms())
    push(graph_automorphism_lift(g, gamma));
  for (auto& gen : factor_automorphisms(g)) push(std::move(gen));
  return out;
}

namespace {

enum class Mode { kFixed, kConj, kLMul, kRMul };

Syllable fold_letter(const LabeledGraph& g, Syllable s) {
  Order o = g.order(s.vertex);
  if (!o.is_finite()) {
    if (s.exponent != 1 && s.exponent != -1)
      throw Error("letter of infinite-order vertex must have exponent +-1");
    return s;
  }
  std::int64_t e = s.exponent % o.n;
  if (e < 0) e += o.n;
  if (e == 0) throw Error("trivial letter");
  return {s.vertex, e};
}

// Minimal m >= 1 with o(a^m) dividing ox; -1 if none below o(a).
std::int64_t minimal_m(Order oa, std::int64_t ox) {
  if (!oa.is_finite()) return -1;
  for (std::int64_t m = 1; m < oa.n; ++m) {
    std::int64_t om = oa.n / gcd64(m, oa.n);
    if (ox % om == 0) return m;
  }
  return -1;
}

}  // namespace

std::optional<Automorphism> whitehead_type_II(const GraphRef& g,
                                              const std::vector<Syllable>& A,
                                              const Syllable& a_raw) {
  Syllable a = fold_letter(*g, a_raw);
  int zeta = a.vertex;
  Order oz = g->order(zeta);
  bool a_in_A = false;
  std::vector<Syllable> letters;
  for (const auto& raw : A) {
    Syllable l = fold_letter(*g, raw);
    if (l.vertex == zeta) {
      if (l == a) {
        a_in_A = true;
        continue;
      }
      if (!oz.is_finite() && l.exponent == -a.exponent)
        throw Error("a^-1 must not lie in A for infinite-order a");
      throw Error("base-vertex letter other than a in A");
    }
    letters.push_back(l);
  }
  if (!a_in_A) throw Error("a must lie in A");

  int n = g->vertex_count();
  std::vector<Mode> mode(n, Mode::kFixed);
  std::vector<bool> has_pos(n, false), has_neg(n, false), has_any(n, false);
  std::vector<Syllable> seen_letter(n, Syllable{-1, 0});
  for (const auto& l : letters) {
    int x = l.vertex;
    Order ox = g->order(x);
    if (has_any[x] && ox.is_finite() && !(seen_letter[x] == l))
      throw Error("several letters of one finite-order vertex in A");
    has_any[x] = true;
    seen_letter[x] = l;
    if (!ox.is_finite()) (l.exponent == 1 ? has_pos : has_neg)[x] = true;
  }
  for (int x = 0; x < n; ++x) {
    if (x == zeta || !has_any[x]) continue;
    Order ox = g->order(x);
    if (!ox.is_finite()) {
      mode[x] = has_pos[x] && has_neg[x] ? Mode::kConj
                : has_pos[x]             ? Mode::kLMul
                                         : Mode::kRMul;
    } else if (!g->adjacent(x, zeta)) {
      mode[x] = Mode::kConj;
    } else {
      std::int64_t c = seen_letter[x].exponent;
      mode[x] = 2 * c <= ox.n ? Mode::kLMul : Mode::kRMul;
    }
  }

  // well-definedness conditions
  VertexSet conj_outside;
  for (int x = 0; x < n; ++x)
    if (mode[x] == Mode::kConj && !g->adjacent(x, zeta)) conj_outside.add(x);
  for (VertexSet comp : g->components_minus_star(zeta)) {
    VertexSet inter = comp & conj_outside;
    if (!inter.empty() && !(inter == comp)) return std::nullopt;
  }
  std::vector<std::int64_t> mult_m(n, 1);
  for (int x = 0; x < n; ++x) {
    if (mode[x] != Mode::kLMul && mode[x] != Mode::kRMul) continue;
    if (!g->dominates(x, zeta)) return std::nullopt;
    Order ox = g->order(x);
    if (ox.is_finite()) {
      if (!g->dominates_strongly(x, zeta)) return std::nullopt;
      if (!oz.is_finite()) return std::nullopt;
      Order oa = Order::finite(oz.n / gcd64(a.exponent, oz.n));
      std::int64_t m = minimal_m(oa, ox.n);
      if (m < 0) return std::nullopt;
      mult_m[x] = m;
    }
  }

  GroupElement a_el = GroupElement::vertex(g, zeta, a.exponent);
  VertexMap fwd = identity_map(g), inv = identity_map(g);
  for (int x = 0; x < n; ++x) {
    if (x == zeta) continue;
    GroupElement xv = GroupElement::vertex(g, x);
    switch (mode[x]) {
      case Mode::kFixed:
        break;
      case Mode::kConj:
        fwd[x] = conjugate(a_el, xv);
        inv[x] = conjugate(invert(a_el), xv);
        break;
      case Mode::kLMul:
        fwd[x] = multiply(power(a_el, mult_m[x]), xv);
        inv[x] = multiply(power(a_el, -mult_m[x]), xv);
        break;
      case Mode::kRMul:
        fwd[x] = multiply(xv, power(a_el, -mult_m[x]));
        inv[x] = multiply(xv, power(a_el, mult_m[x]));
        break;
    }
  }
  try {
    return Automorphism(g, std::move(fwd), std::move(inv));
  } catch (const Error& e) {
    throw Error(std::string("(A,a) passed the conditions but is ill-defined: ") +
                e.what());
  }
}

namespace {

// Canonical (A, a) realizations for the two generator families beyond
// type I.
struct WhiteheadRealization {
  Syllable a;
  std::vector<Syllable> letters;  // A minus a
};

WhiteheadRealization realize_transvection(const LabeledGraph& g,
                                          const TransvectionDesc& t) {
  WhiteheadRealization r;
  Order ox = g.order(t.x), oy = g.order(t.y);
  if (!ox.is_finite()) {
    // x maps to x a^-1 with a = y^-q
    r.a = {t.y, oy.is_finite() ? (oy.n - t.q % oy.n) % oy.n : -1};
    r.letters.push_back({t.x, -1});
  } else {
    // x maps to a^m x with a = y^q, m = 1
    r.a = {t.y, t.q};
    r.letters.push_back({t.x, 1});
  }
  return r;
}

WhiteheadRealization realize_partial_conj(const LabeledGraph& g,
                                          const PartialConjDesc& p) {
  WhiteheadRealization r;
  r.a = {p.vertex, 1};
  for (int z : p.component.members()) {
    r.letters.push_back({z, 1});
    if (!g.order(z).is_finite()) r.letters.push_back({z, -1});
  }
  return r;
}

std::string render_witness(const LabeledGraph& g, const WhiteheadRealization& r) {
  WhiteheadDesc d{r.a, r.letters};
  return describe(g, GeneratorDescriptor{d});
}

}  // namespace

WhiteheadCoverage check_generators_in_whitehead(const GraphRef& g) {
  WhiteheadCoverage cov;
  auto gens = generating_set(g);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Generator& gen = gens[i];
    bool type1 = std::holds_alternative<GraphAutDesc>(gen.desc) ||
                 std::holds_alternative<FactorDesc>(gen.desc);
    for (const auto& alias : gen.aliases)
      if (std::holds_alternative<GraphAutDesc>(alias) ||
          std::holds_alternative<FactorDesc>(alias))
        type1 = true;
    if (type1) {
      cov.witnesses.push_back({i, "type I"});
      continue;
    }
    std::optional<WhiteheadRealization> r;
    if (const auto* t = std::get_if<TransvectionDesc>(&gen.desc))
      r = realize_transvection(*g, *t);
    else if (const auto* p = std::get_if<PartialConjDesc>(&gen.desc))
      r = realize_partial_conj(*g, *p);
    bool matched = false;
    if (r) {
      std::vector<Syllable> A = r->letters;
      A.push_back(r->a);
      if (auto aut = whitehead_type_II(g, A, r->a);
          aut && equal(*aut, gen.aut)) {
        cov.witnesses.push_back({i, render_witness(*g, *r)});
        matched = true;
      }
    }
    if (!matched) {
      cov.all_covered = false;
      cov.witnesses.push_back({i, "NOT COVERED"});
    }
  }
  return cov;
}

}  // namespace graphprod
