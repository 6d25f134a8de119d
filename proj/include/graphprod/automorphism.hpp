#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphprod/words.hpp"

namespace graphprod {

// Candidate endomorphism: one image per vertex, indexed by vertex.
using VertexMap = std::vector<GroupElement>;

struct WellDefinedReport {
  bool ok = true;
  std::string witness;  // failing vertex or edge when !ok
};

// Adjacent images must commute and every image must keep its vertex's
// order.
WellDefinedReport is_well_defined(const LabeledGraph& g, const VertexMap& m);

// Substitution homomorphism.
GroupElement apply_map(const VertexMap& m, const GroupElement& e);

VertexMap identity_map(const GraphRef& g);

// Verified automorphism: both directions well-defined and mutually
// inverse on the vertices. Construction throws Error otherwise.
class Automorphism {
 public:
  Automorphism(GraphRef g, VertexMap forward, VertexMap inverse);

  static Automorphism identity(GraphRef g);

  const GraphRef& graph() const { return graph_; }
  const VertexMap& forward() const { return forward_; }
  const VertexMap& inverse_map() const { return inverse_; }

  GroupElement apply(const GroupElement& e) const { return apply_map(forward_, e); }
  GroupElement apply_inverse(const GroupElement& e) const {
    return apply_map(inverse_, e);
  }

  // Canonical image-tuple string; equality of automorphisms is equality
  // of keys.
  std::string key() const;

 private:
  GraphRef graph_;
  VertexMap forward_, inverse_;
};

Automorphism compose(const Automorphism& f, const Automorphism& g);  // f after g
Automorphism inverse(const Automorphism& a);
bool equal(const Automorphism& f, const Automorphism& g);

// Vertices v with theta(v) conjugate to v itself.
VertexSet conjugating_set(const Automorphism& theta);

// Vertices satisfying v in csupp theta(v) and connected complement
// support.
VertexSet simple_set(const Automorphism& theta);
bool is_simple(const Automorphism& theta);

bool is_quasi_simple(const Automorphism& theta);

// Labeled graph automorphism gamma with gamma(v) in csupp theta(v) for
// all v; existence is guaranteed for genuine automorphisms, so a failed
// search throws.
GraphAutomorphism induced_graph_automorphism(const Automorphism& theta);

// Bounded bidirectional search for a composition of generators equal to
// `target`; indices are in functional order (apply right to left).
std::optional<std::vector<int>> decompose_over_generators(
    const Automorphism& target, const std::vector<Automorphism>& gens,
    int max_depth = 8);

}  // namespace graphprod
