#include <doctest.h>

#include <set>

#include "graphprod/generators.hpp"
#include "graphprod/oracle.hpp"
#include "test_helpers.hpp"

using namespace graphprod;
using namespace gptest;

TEST_CASE("factor automorphisms per label") {
  auto f1 = graph({{"v", 0}}, {});
  auto inv = factor_automorphisms(f1);
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].aut.apply(w(f1, "v")).str() == "v^-1");

  auto z2 = graph({{"v", 2}}, {});
  CHECK(factor_automorphisms(z2).empty());

  auto z5 = graph({{"v", 5}}, {});
  auto f5 = factor_automorphisms(z5);
  REQUIRE(f5.size() == 3);
  std::set<std::int64_t> ms;
  for (const auto& gen : f5) ms.insert(std::get<FactorDesc>(gen.desc).m);
  CHECK(ms == std::set<std::int64_t>{2, 3, 4});
  for (const auto& gen : f5)
    CHECK(equal(compose(gen.aut, inverse(gen.aut)), Automorphism::identity(z5)));
}

TEST_CASE("transvections follow the domination and order rules") {
  // infinite x dominated by y: q = 1
  auto p3 = path3();
  auto t = transvection(p3, p3->index_of("a"), p3->index_of("b"));
  REQUIRE(t);
  CHECK(std::get<TransvectionDesc>(t->desc).q == 1);

  // 2 and 8 strongly dominating: q = 8/2 = 4
  auto g28 = graph({{"x", 2}, {"y", 8}}, {{"x", "y"}});
  auto t28 = transvection(g28, 0, 1);
  REQUIRE(t28);
  CHECK(std::get<TransvectionDesc>(t28->desc).q == 4);
  CHECK(t28->aut.apply(w(g28, "x")) == w(g28, "x y^4"));

  // same prime, o(y) | o(x): q = 1
  auto g82 = graph({{"x", 8}, {"y", 2}}, {{"x", "y"}});
  auto t82 = transvection(g82, 0, 1);
  REQUIRE(t82);
  CHECK(std::get<TransvectionDesc>(t82->desc).q == 1);

  // distinct primes never admit a power
  auto g23 = graph({{"x", 2}, {"y", 3}}, {{"x", "y"}});
  CHECK(!transvection(g23, 0, 1));

  // finite x with infinite y never works
  auto gfin = graph({{"x", 2}, {"y", 0}}, {{"x", "y"}});
  CHECK(!transvection(gfin, 0, 1));

  // non-adjacent finite x fails even when dominated
  auto gnon = graph({{"x", 4}, {"m", 0}, {"y", 4}}, {{"x", "m"}, {"m", "y"}});
  CHECK(!transvection(gnon, 0, 2));

  CHECK_THROWS_AS(transvection(p3, 0, 0), Error);
}

TEST_CASE("transvection verdict matches a direct well-definedness scan") {
  // oracle: try x -> x y^q for growing q and compare with the constructor
  std::vector<GraphRef> graphs = {
      path3(),
      path3(2, 4, 0),
      graph({{"x", 2}, {"y", 8}}, {{"x", "y"}}),
      graph({{"x", 9}, {"y", 3}}, {{"x", "y"}}),
      graph({{"x", 2}, {"y", 3}}, {{"x", "y"}}),
      square(),
      discrete2(2, 3),
  };
  for (const auto& g : graphs) {
    for (int x = 0; x < g->vertex_count(); ++x)
      for (int y = 0; y < g->vertex_count(); ++y) {
        if (x == y) continue;
        std::int64_t oracle_q = 0;
        std::int64_t bound = g->order(y).is_finite()
                                 ? std::min<std::int64_t>(16, g->order(y).n - 1)
                                 : 16;
        for (std::int64_t q = 1; q <= bound && oracle_q == 0; ++q) {
          VertexMap m = identity_map(g);
          m[x] = multiply(GroupElement::vertex(g, x),
                          GroupElement::vertex(g, y, q));
          if (is_well_defined(*g, m).ok) oracle_q = q;
        }
        auto got = transvection(g, x, y);
        if (oracle_q == 0) {
          CHECK(!got);
        } else {
          REQUIRE(got);
          CHECK(std::get<TransvectionDesc>(got->desc).q == oracle_q);
        }
      }
  }
}

namespace {

// Full prediction of well-definedness for x -> x y^q at every power q,
// not just the minimal one.
bool predicted_transvection_wd(const LabeledGraph& g, int x, int y,
                               std::int64_t q) {
  Order ox = g.order(x), oy = g.order(y);
  if (oy.is_finite() && q % oy.n == 0) return true;  // image is x itself
  if (!ox.is_finite()) return g.dominates(x, y);
  if (!g.dominates_strongly(x, y) || !oy.is_finite()) return false;
  auto spf = [](std::int64_t n) {
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return d;
    return n;
  };
  if (spf(ox.n) != spf(oy.n)) return false;
  std::int64_t qmin = oy.n > ox.n ? oy.n / ox.n : 1;
  return q % qmin == 0;
}

}  // namespace

TEST_CASE("well-definedness of every transvection power is predicted") {
  std::vector<GraphRef> graphs = {
      path3(),
      path3(2, 4, 0),
      graph({{"x", 2}, {"y", 8}}, {{"x", "y"}}),
      graph({{"x", 9}, {"y", 3}, {"z", 3}}, {{"x", "y"}, {"x", "z"}}),
      graph({{"x", 4}, {"y", 8}, {"z", 2}}, {{"x", "y"}, {"y", "z"}}),
      graph({{"x", 2}, {"y", 3}}, {{"x", "y"}}),
      square(),
  };
  for (const auto& g : graphs)
    for (int x = 0; x < g->vertex_count(); ++x)
      for (int y = 0; y < g->vertex_count(); ++y) {
        if (x == y) continue;
        for (std::int64_t q = 1; q <= 12; ++q) {
          VertexMap m = identity_map(g);
          m[x] = multiply(GroupElement::vertex(g, x),
                          GroupElement::vertex(g, y, q));
          CHECK(is_well_defined(*g, m).ok ==
                predicted_transvection_wd(*g, x, y, q));
        }
      }
}

TEST_CASE("partial conjugations per component") {
  CHECK(partial_conjugations(path3()).size() == 2);  // a: {c}, b: none, c: {a}

  auto p5 = graph({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}},
                  {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
  int around_c = 0;
  for (const auto& gen : partial_conjugations(p5))
    if (std::get<PartialConjDesc>(gen.desc).vertex == p5->index_of("c")) ++around_c;
  CHECK(around_c == 2);

  auto sq = square();
  for (const auto& gen : partial_conjugations(sq)) {
    const auto& d = std::get<PartialConjDesc>(gen.desc);
    if (d.vertex == sq->index_of("a")) {
      CHECK(name_set(*sq, d.component) == std::set<std::string>{"c"});
      CHECK(gen.aut.apply(w(sq, "c")) == w(sq, "a c a^-1"));
    }
  }
}

TEST_CASE("graph automorphism lifts compose functorially") {
  auto fg = flip_graph();
  auto autos = fg->labeled_automorphisms();
  REQUIRE(autos.size() == 2);
  Automorphism id_lift = graph_automorphism_lift(fg, autos[0]).aut;
  CHECK(equal(id_lift, Automorphism::identity(fg)));
  Automorphism flip = graph_automorphism_lift(fg, autos[1]).aut;
  CHECK(flip.apply(w(fg, "a")).str() == "b");
  CHECK(equal(compose(flip, flip), Automorphism::identity(fg)));
}

TEST_CASE("generating set on a single infinite vertex") {
  auto f1 = graph({{"v", 0}}, {});
  auto gens = generating_set(f1);
  REQUIRE(gens.size() == 1);
  CHECK(std::holds_alternative<FactorDesc>(gens[0].desc));
}

TEST_CASE("generating set of the free group of rank two") {
  auto f2 = discrete2();
  auto gens = generating_set(f2);
  int lifts = 0, factors = 0, transvections = 0, conjugations = 0;
  for (const auto& gen : gens) {
    lifts += std::holds_alternative<GraphAutDesc>(gen.desc);
    factors += std::holds_alternative<FactorDesc>(gen.desc);
    transvections += std::holds_alternative<TransvectionDesc>(gen.desc);
    conjugations += std::holds_alternative<PartialConjDesc>(gen.desc);
  }
  CHECK(lifts == 1);          // the swap
  CHECK(factors == 2);        // two inversions
  CHECK(transvections == 2);  // a -> ab, b -> ba
  CHECK(conjugations == 2);   // sigma_{b,a}, sigma_{a,b}
}

TEST_CASE("generating set of the order-2 edge") {
  // swap plus both transvections; no factor automorphisms, no partial
  // conjugations
  auto k2 = graph({{"a", 2}, {"b", 2}}, {{"a", "b"}});
  auto gens = generating_set(k2);
  int lifts = 0, transvections = 0;
  for (const auto& gen : gens) {
    lifts += std::holds_alternative<GraphAutDesc>(gen.desc);
    transvections += std::holds_alternative<TransvectionDesc>(gen.desc);
    CHECK(!std::holds_alternative<FactorDesc>(gen.desc));
    CHECK(!std::holds_alternative<PartialConjDesc>(gen.desc));
  }
  CHECK(lifts == 1);
  CHECK(transvections == 2);
  CHECK(gens.size() == 3);
}

TEST_CASE("every generator is well-defined with a working inverse") {
  for (const auto& g :
       {path3(), path3(2, 4, 0), square(), flip_graph(), discrete2(2, 3)}) {
    for (const auto& gen : generating_set(g)) {
      CHECK(is_well_defined(*g, gen.aut.forward()).ok);
      CHECK(equal(compose(gen.aut, inverse(gen.aut)), Automorphism::identity(g)));
    }
  }
}

TEST_CASE("star and one sets filter the right families") {
  auto p3 = path3();
  auto all = generating_set(p3);
  auto star = star_generating_set(p3);
  auto one = subgroup_one_set(p3);

  auto keys = [](const std::vector<Generator>& gens) {
    std::set<std::string> out;
    for (const auto& g : gens) out.insert(g.aut.key());
    return out;
  };
  auto all_keys = keys(all), star_keys = keys(star), one_keys = keys(one);
  for (const auto& k : one_keys) CHECK(star_keys.count(k));
  for (const auto& k : star_keys) CHECK(all_keys.count(k));

  // tau_{a,c} over non-adjacent vertices is dropped from the star set
  for (const auto& gen : star)
    if (const auto* t = std::get_if<TransvectionDesc>(&gen.desc))
      CHECK(p3->adjacent(t->x, t->y));
  for (const auto& gen : one)
    CHECK(!std::holds_alternative<PartialConjDesc>(gen.desc));

  // a graph with no edges keeps no transvections in the star set
  auto f2 = discrete2();
  for (const auto& gen : star_generating_set(f2))
    CHECK(!std::holds_alternative<TransvectionDesc>(gen.desc));
}

TEST_CASE("lift conjugation permutes the families") {
  auto fg = flip_graph();
  auto autos = fg->labeled_automorphisms();
  Automorphism flip = graph_automorphism_lift(fg, autos[1]).aut;
  int a = fg->index_of("a"), b = fg->index_of("b");

  auto phis = factor_automorphisms(fg);
  auto find_phi = [&](int v) {
    for (const auto& gen : phis)
      if (std::get<FactorDesc>(gen.desc).vertex == v) return gen.aut;
    throw Error("missing inversion");
  };
  CHECK(equal(compose(compose(flip, find_phi(a)), inverse(flip)), find_phi(b)));

  auto tau_ab = transvection(fg, a, b);
  auto tau_ba = transvection(fg, b, a);
  REQUIRE(tau_ab);
  REQUIRE(tau_ba);
  CHECK(equal(compose(compose(flip, tau_ab->aut), inverse(flip)), tau_ba->aut));
}

TEST_CASE("sigma equals the squared transvection-inversion composite") {
  // wherever x <= y, x,y non-adjacent, o(x) infinite
  for (const auto& g : {path3(), square(), flip_graph(), discrete2()}) {
    for (int x = 0; x < g->vertex_count(); ++x)
      for (int y = 0; y < g->vertex_count(); ++y) {
        if (x == y || g->adjacent(x, y)) continue;
        if (!g->dominates(x, y) || g->order(x).is_finite()) continue;
        auto tau = transvection(g, x, y);
        REQUIRE(tau);
        VertexMap phi_fwd = identity_map(g);
        phi_fwd[x] = GroupElement::vertex(g, x, -1);
        Automorphism phi(g, phi_fwd, phi_fwd);
        Automorphism step = compose(inverse(tau->aut), phi);
        Automorphism squared = compose(step, step);

        VertexMap sigma_fwd = identity_map(g);
        sigma_fwd[x] = conjugate(GroupElement::vertex(g, y),
                                 GroupElement::vertex(g, x));
        VertexMap sigma_inv = identity_map(g);
        sigma_inv[x] = conjugate(GroupElement::vertex(g, y, -1),
                                 GroupElement::vertex(g, x));
        Automorphism sigma(g, sigma_fwd, sigma_inv);
        CHECK(equal(squared, sigma));
      }
  }
}

TEST_CASE("whitehead type I lists lifts and factor automorphisms") {
  auto fg = flip_graph();
  auto omega1 = whitehead_type_I(fg);
  CHECK(omega1.size() == 5);  // flip + four inversions
  auto closure_res = closure(fg, [&] {
    std::vector<Automorphism> v;
    for (const auto& gen : omega1) v.push_back(gen.aut);
    return v;
  }());
  CHECK(closure_res.complete);  // <Omega_1> is finite
  CHECK(closure_res.maps.size() == 32);  // flip group x inversions = 2 * 2^4
}

TEST_CASE("whitehead type II: conjugation letters reproduce sigma") {
  auto sq = square();
  int a = sq->index_of("a"), c = sq->index_of("c");
  std::vector<Syllable> A{{a, 1}, {c, 1}, {c, -1}};
  auto aut = whitehead_type_II(sq, A, {a, 1});
  REQUIRE(aut);
  for (const auto& gen : partial_conjugations(sq))
    if (std::get<PartialConjDesc>(gen.desc).vertex == a)
      CHECK(equal(*aut, gen.aut));

  // minimal A = {a} moves nothing
  std::vector<Syllable> just_a{{a, 1}};
  auto degenerate = whitehead_type_II(sq, just_a, {a, 1});
  REQUIRE(degenerate);
  CHECK(equal(*degenerate, Automorphism::identity(sq)));
}

TEST_CASE("whitehead type II: multiplication letter reproduces a transvection") {
  auto p3 = path3();
  int a = p3->index_of("a"), b = p3->index_of("b");
  // tau_{a,b}: a -> a b realized with zeta = b, a-letter b^-1, A = {b^-1, a^-1}
  std::vector<Syllable> A{{b, -1}, {a, -1}};
  auto aut = whitehead_type_II(p3, A, {b, -1});
  REQUIRE(aut);
  auto tau = transvection(p3, a, b);
  REQUIRE(tau);
  CHECK(equal(*aut, tau->aut));
}

TEST_CASE("whitehead type II rejects violated conditions") {
  auto p3 = path3();
  int a = p3->index_of("a"), b = p3->index_of("b"), c = p3->index_of("c");
  // conjugating {a} alone about c-star: a is a full component, fine;
  // conjugating half a component must fail
  auto p4 = graph({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}},
                  {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  int pa = p4->index_of("a"), pc = p4->index_of("c"), pd = p4->index_of("d");
  // graph minus d-star leaves {a, b} connected; conjugating only a fails
  std::vector<Syllable> bad{{pd, 1}, {pa, 1}, {pa, -1}};
  CHECK(!whitehead_type_II(p4, bad, {pd, 1}));

  // multiplying a vertex that is not dominated fails
  std::vector<Syllable> nodom{{c, 1}, {b, 1}};
  CHECK(!whitehead_type_II(p3, nodom, {c, 1}));
  (void)a;
  (void)pc;

  // malformed letters throw
  std::vector<Syllable> malformed{{b, 2}, {a, 1}};
  CHECK_THROWS_AS(whitehead_type_II(p3, malformed, {b, 2}),
                  Error);  // exponent 2 on an infinite vertex
  std::vector<Syllable> missing_a{{a, 1}};
  CHECK_THROWS_AS(whitehead_type_II(p3, missing_a, {b, 1}), Error);
}

TEST_CASE("accepted whitehead pairs are always well-defined") {
  // soundness sweep: enumerate (A, a) mode assignments on small
  // graphs; whitehead_type_II already asserts well-definedness on accept
  auto cycle5 = graph({{"a", 0}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}},
                      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
  for (const auto& g : {path3(2, 4, 0), square(), discrete2(2, 3), cycle5}) {
    int n = g->vertex_count();
    int accepted = 0;
    for (int zeta = 0; zeta < n; ++zeta) {
      std::vector<Syllable> a_letters;
      if (g->order(zeta).is_finite())
        for (std::int64_t q = 1; q < g->order(zeta).n; ++q)
          a_letters.push_back({zeta, q});
      else
        a_letters.assign({{zeta, 1}, {zeta, -1}});
      for (const auto& a : a_letters) {
        std::vector<int> mode(n, 0);
        for (;;) {
          std::vector<Syllable> A{a};
          bool valid = true;
          for (int x = 0; x < n && valid; ++x) {
            if (x == zeta) {
              if (mode[x] != 0) valid = false;
              continue;
            }
            Order ox = g->order(x);
            switch (mode[x]) {
              case 0:
                break;
              case 1:  // conjugate
                A.push_back({x, 1});
                if (!ox.is_finite()) A.push_back({x, -1});
                break;
              case 2:  // left multiply
                A.push_back({x, 1});
                if (ox.is_finite() && !g->adjacent(x, zeta)) valid = false;
                break;
              case 3:  // right multiply
                A.push_back({x, ox.is_finite() ? ox.n - 1 : -1});
                if (ox.is_finite() && !g->adjacent(x, zeta)) valid = false;
                if (ox.is_finite() && ox.n == 2) valid = false;  // same letter as left
                break;
            }
          }
          if (valid) {
            auto aut = whitehead_type_II(g, A, a);
            if (aut) {
              ++accepted;
              CHECK(is_well_defined(*g, aut->forward()).ok);
            }
          }
          int i = 0;
          while (i < n && ++mode[i] == 4) mode[i++] = 0;
          if (i == n) break;
        }
      }
    }
    CHECK(accepted > 0);
  }
}

TEST_CASE("generator families are covered by whitehead automorphisms") {
  for (const auto& g :
       {path3(), flip_graph(), path3(2, 4, 0), graph({{"v", 0}}, {})}) {
    auto cov = check_generators_in_whitehead(g);
    CHECK(cov.all_covered);
    CHECK(cov.witnesses.size() == generating_set(g).size());
  }
}
