#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/labeled_graph.hpp"

namespace graphprod {

struct Syllable {
  int vertex = 0;
  std::int64_t exponent = 0;

  bool operator==(const Syllable&) const = default;
};

// Element of the graph product W(Gamma, o), stored as the canonical
// reduced syllable sequence: merged/cancelled until stable, then the
// lexicographically least shuffle by vertex order. Exponents of
// finite-order vertices live in [1, o(v)-1]. Immutable.
class GroupElement {
 public:
  static GroupElement identity(GraphRef g);
  static GroupElement from_syllables(GraphRef g, std::vector<Syllable> raw);
  static GroupElement vertex(GraphRef g, int v, std::int64_t e = 1);

  const GraphRef& graph() const { return graph_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }

  std::int64_t length() const;
  VertexSet support() const;

  // Canonical rendering, also the hash/dedup key. "1" for the identity.
  std::string str() const;

  bool operator==(const GroupElement& o) const;
  bool operator<(const GroupElement& o) const;  // by length, then syllables

 private:
  explicit GroupElement(GraphRef g) : graph_(std::move(g)) {}

  GraphRef graph_;
  std::vector<Syllable> syllables_;
};

// Length of one syllable: |e| for infinite order, min(e, o-e) otherwise,
// matching the word length over the alphabet of vertex letters.
std::int64_t syllable_length(const LabeledGraph& g, const Syllable& s);

std::vector<Syllable> parse_word(const LabeledGraph& g, const std::string& text);
GroupElement parse_element(GraphRef g, const std::string& text);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);
GroupElement power(const GroupElement& a, std::int64_t n);
GroupElement conjugate(const GroupElement& by, const GroupElement& g);
bool commutes(const GroupElement& a, const GroupElement& b);

bool is_cyclically_reduced(const GroupElement& g);

// g = w u w^-1 with u of minimal length in the conjugacy class of g.
struct CyclicReduction {
  GroupElement conjugator;  // w
  GroupElement core;        // u
};
CyclicReduction cyclically_reduce(const GroupElement& g);

VertexSet cyclic_support(const GroupElement& g);

Order order_of(const GroupElement& g);

// Classification of u -> x u x^-1 for a single letter x = v^s.
struct Reduction {
  int type = 4;  // 0..4
  GroupElement result;
};
Reduction reduction_type(const GroupElement& u, int vertex, int sign);

// w = w4 w3 w2 w1 with the letters of w_k acting on u by type-k
// reductions; w1, w2, w3 commute pairwise.
struct ConjugationDecomposition {
  GroupElement w4, w3, w2, w1;
};
ConjugationDecomposition conjugation_decomposition(const GroupElement& u,
                                                   const GroupElement& w);

}  // namespace graphprod
