#pragma once

#include <vector>

#include "graphprod/words.hpp"

namespace graphprod {

// Maximal root: g = root^exponent with the exponent maximal (taken in
// [1, o(g)-1] when g has finite order). `unique` is false when several
// candidates realize the maximal exponent; the least canonical one is
// returned.
struct RootResult {
  GroupElement root;
  std::int64_t exponent = 1;
  bool unique = true;
};
RootResult root(const GroupElement& g);

// Commuting factorization of a cyclically reduced u along the connected
// components of its support in the complement graph.
struct BasicFactor {
  GroupElement root;
  std::int64_t exponent = 1;
};
struct BasicForm {
  std::vector<BasicFactor> factors;
  VertexSet link;  // lk(supp u)
};
BasicForm basic_form(const GroupElement& u);

// C(g) = w ( <u_1> x ... x <u_n> x <lk S> ) w^-1 for g = w u w^-1.
struct CentralizerPresentation {
  bool whole_group = false;
  GroupElement conjugator;
  std::vector<GroupElement> factors;  // unconjugated cyclic generators
  VertexSet link;
  BasicForm basic;  // of the cyclically reduced part; empty for identity

  std::vector<GroupElement> generators() const;  // conjugated
};
CentralizerPresentation centralizer(const GroupElement& g);

// Labeled graph K(u) whose graph product presents C(u): a complete graph
// on one fresh vertex per basic-form factor, joined to lk(supp u).
struct CentralizerGraph {
  LabeledGraph graph;
  int fresh_count = 0;
};
CentralizerGraph centralizer_graph(const GroupElement& u);

// Number of vertices of K(u) for the cyclically reduced part u of g.
int rank(const GroupElement& g);

}  // namespace graphprod
