#include <doctest.h>

#include <random>

#include "graphprod/centralizer.hpp"
#include "graphprod/oracle.hpp"
#include "test_helpers.hpp"

using namespace graphprod;
using namespace gptest;

TEST_CASE("roots of powers") {
  auto f1 = graph({{"a", 0}}, {});
  auto r = root(w(f1, "a^4"));
  CHECK(r.root.str() == "a");
  CHECK(r.exponent == 4);

  auto f2 = discrete2();
  auto r2 = root(w(f2, "a b a b"));
  CHECK(r2.root == w(f2, "a b"));
  CHECK(r2.exponent == 2);
  CHECK(r2.unique);

  // oracle: no element of the radius-4 ball has a higher power equal to abab
  GroupElement target = w(f2, "a b a b");
  std::int64_t best = 1;
  for (const auto& cand : enumerate_ball(f2, 4).elements) {
    if (cand.is_identity()) continue;
    GroupElement pw = cand;
    for (int k = 2; k <= 4; ++k) {
      pw = multiply(pw, cand);
      if (pw == target) best = std::max<std::int64_t>(best, k);
    }
  }
  CHECK(best == 2);

  auto z5 = graph({{"v", 5}}, {});
  auto r3 = root(w(z5, "v^2"));
  CHECK(r3.root.str() == "v^3");
  CHECK(r3.exponent == 4);
  CHECK(power(r3.root, r3.exponent) == w(z5, "v^2"));

  // oracle: solve every power equation in Z_5 by hand
  for (std::int64_t n = 4; n >= 1; --n) {
    bool solvable = false;
    for (std::int64_t a = 1; a < 5; ++a) solvable |= (a * n % 5 == 2);
    if (n == 4) CHECK(solvable);
  }

  CHECK_THROWS_AS(root(w(f1, "")), Error);
}

TEST_CASE("root of a conjugate is the conjugated root") {
  auto f3 = graph({{"a", 0}, {"b", 0}, {"c", 0}}, {});
  GroupElement g = conjugate(w(f3, "c"), w(f3, "a b a b"));
  auto r = root(g);
  CHECK(r.exponent == 2);
  CHECK(power(r.root, 2) == g);
  CHECK(r.root == conjugate(w(f3, "c"), w(f3, "a b")));
}

TEST_CASE("root exponent in a small cyclic group") {
  auto z4 = graph({{"v", 4}}, {});
  auto r = root(w(z4, "v^2"));
  // o(v^2) = 2, so n ranges in {1} and the root is v^2 itself
  CHECK(r.exponent == 1);
  CHECK(r.root.str() == "v^2");
}

TEST_CASE("basic form on singleton components") {
  auto pair = graph({{"a", 0}, {"b", 0}}, {{"a", "b"}});
  auto bf = basic_form(w(pair, "a^2 b^3"));
  REQUIRE(bf.factors.size() == 2);
  CHECK(bf.factors[0].root.str() == "a");
  CHECK(bf.factors[0].exponent == 2);
  CHECK(bf.factors[1].root.str() == "b");
  CHECK(bf.factors[1].exponent == 3);
  CHECK(bf.link.empty());

  auto f2 = discrete2();
  auto bf2 = basic_form(w(f2, "a b"));
  REQUIRE(bf2.factors.size() == 1);
  CHECK(bf2.factors[0].root == w(f2, "a b"));
  CHECK(bf2.factors[0].exponent == 1);

  auto p3 = path3();
  auto bf3 = basic_form(w(p3, "b"));
  REQUIRE(bf3.factors.size() == 1);
  CHECK(bf3.factors[0].root.str() == "b");
  CHECK(bf3.factors[0].exponent == 1);
  CHECK(name_set(*p3, bf3.link) == std::set<std::string>{"a", "c"});

  CHECK_THROWS_AS(basic_form(w(f2, "")), Error);
  CHECK_THROWS_AS(basic_form(w(f2, "a b a^-1")), Error);
}

TEST_CASE("basic form reconstructs and factors commute") {
  std::mt19937 rng(808);
  for (const auto& g :
       {square(), path3(2, 4, 0), discrete2(2, 3), flip_graph()}) {
    int made = 0;
    for (int trial = 0; trial < 200 && made < 40; ++trial) {
      std::vector<Syllable> raw;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i)
        raw.push_back({static_cast<int>(rng() % g->vertex_count()),
                       static_cast<std::int64_t>(rng() % 5) - 2});
      GroupElement u = cyclically_reduce(GroupElement::from_syllables(g, raw)).core;
      if (u.is_identity()) continue;
      ++made;
      auto bf = basic_form(u);
      GroupElement prod = GroupElement::identity(g);
      for (const auto& f : bf.factors) prod = multiply(prod, power(f.root, f.exponent));
      CHECK(prod == u);
      for (std::size_t i = 0; i < bf.factors.size(); ++i)
        for (std::size_t j = i + 1; j < bf.factors.size(); ++j)
          CHECK(commutes(bf.factors[i].root, bf.factors[j].root));
      // factor supports partition supp u along complement components
      VertexSet total;
      for (const auto& f : bf.factors) {
        CHECK((total & f.root.support()).empty());
        total = total | f.root.support();
      }
      CHECK(total == u.support());
      // infinite-order roots are primitive
      for (const auto& f : bf.factors)
        if (!order_of(f.root).is_finite()) CHECK(root(f.root).exponent == 1);
    }
  }
}

TEST_CASE("centralizer presentations") {
  auto p3 = path3();
  auto pres = centralizer(w(p3, "b"));
  CHECK(!pres.whole_group);
  REQUIRE(pres.factors.size() == 1);
  CHECK(pres.factors[0].str() == "b");
  CHECK(name_set(*p3, pres.link) == std::set<std::string>{"a", "c"});

  // square with non-adjacent diagonal {a, c}: g = a c, link = {b, d}
  auto sq = square();
  auto pres2 = centralizer(w(sq, "a c"));
  REQUIRE(pres2.factors.size() == 1);
  CHECK(pres2.factors[0] == w(sq, "a c"));
  CHECK(name_set(*sq, pres2.link) == std::set<std::string>{"b", "d"});

  // conjugation covariance: a does not centralize ac, so the conjugate
  // is genuinely twisted and the presentation follows it
  GroupElement target = conjugate(w(sq, "a"), w(sq, "a c"));
  auto pres3 = centralizer(target);
  CHECK(!pres3.conjugator.is_identity());
  CHECK(conjugate(pres3.conjugator, pres2.factors[0]) ==
        conjugate(w(sq, "a"), pres2.factors[0]));
  for (const auto& gen : pres3.generators()) CHECK(commutes(gen, target));

  auto whole = centralizer(w(p3, ""));
  CHECK(whole.whole_group);
  CHECK(whole.link == p3->vertices());
}

TEST_CASE("centralizer of a non-generator torsion power contains the vertex") {
  auto z4 = graph({{"v", 4}, {"w", 0}}, {{"v", "w"}});
  auto pres = centralizer(w(z4, "v^2"));
  REQUIRE(pres.factors.size() == 1);
  CHECK(pres.factors[0].str() == "v");  // not just <v^2>
}

TEST_CASE("centralizer graph shape") {
  auto p3 = path3();
  auto k = centralizer_graph(w(p3, "b"));
  CHECK(k.fresh_count == 1);
  CHECK(k.graph.vertex_count() == 3);  // x1 joined to {a, c}
  CHECK(k.graph.adjacent(0, 1));
  CHECK(k.graph.adjacent(0, 2));
  CHECK(!k.graph.order(0).is_finite());

  auto sq = square();
  auto k2 = centralizer_graph(w(sq, "a c"));
  CHECK(k2.fresh_count == 1);
  CHECK(k2.graph.vertex_count() == 3);
  CHECK(!k2.graph.order(0).is_finite());

  // finite-order factors are single vertices and keep their labels
  auto mixed = graph({{"v", 4}, {"z", 0}}, {{"v", "z"}});
  auto k3 = centralizer_graph(w(mixed, "v^2"));
  CHECK(k3.fresh_count == 1);
  CHECK(k3.graph.order(0) == Order::finite(4));
}

TEST_CASE("rank") {
  auto p3 = path3();
  CHECK(rank(w(p3, "b")) == 3);
  CHECK(rank(w(p3, "a")) == 2);
  CHECK(rank(conjugate(w(p3, "b"), w(p3, "a"))) == rank(w(p3, "a")));
  CHECK(rank(w(p3, "")) == 3);
}

TEST_CASE("rank inequality of the basic-form vertices") {
  std::mt19937 rng(5858);
  for (const auto& g : {path3(), square(), flip_graph(), path3(2, 4, 0)}) {
    int made = 0;
    for (int trial = 0; trial < 150 && made < 30; ++trial) {
      std::vector<Syllable> raw;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i)
        raw.push_back({static_cast<int>(rng() % g->vertex_count()),
                       static_cast<std::int64_t>(rng() % 3) - 1});
      GroupElement u = cyclically_reduce(GroupElement::from_syllables(g, raw)).core;
      if (u.is_identity()) continue;
      ++made;
      for (int y : u.support().members())
        CHECK(rank(u) <= rank(GroupElement::vertex(g, y)));
    }
  }
}

TEST_CASE("finite order forces singleton connected support") {
  for (const auto& g : {path3(2, 4, 0), discrete2(2, 3), flip_graph()}) {
    for (const auto& e : enumerate_ball(g, 4).elements) {
      if (e.is_identity() || !is_cyclically_reduced(e)) continue;
      if (!order_of(e).is_finite()) continue;
      for (const auto& f : basic_form(e).factors)
        if (order_of(f.root).is_finite()) {
          CHECK(f.root.support().size() == 1);
          CHECK(is_prime_power(order_of(f.root).n));
        }
    }
  }
}
