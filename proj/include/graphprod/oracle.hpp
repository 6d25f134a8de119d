#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "graphprod/automorphism.hpp"
#include "graphprod/words.hpp"

namespace graphprod {

// All canonical forms of length <= radius, grouped nowhere: a flat,
// deterministically ordered list plus a membership key set.
struct Ball {
  int radius = 0;
  std::vector<GroupElement> elements;

  bool contains(const GroupElement& e) const;
};
Ball enumerate_ball(const GraphRef& g, int radius);

// Multiplication table of a finite W(Gamma, o); requires a complete graph
// with finite labels.
struct FiniteGroupTable {
  std::vector<GroupElement> elements;
  std::vector<std::vector<int>> product;

  int index_of(const GroupElement& e) const;
};
FiniteGroupTable enumerate_finite_group(const GraphRef& g);

std::vector<GroupElement> brute_centralizer(const GraphRef& g,
                                            const GroupElement& elem,
                                            int radius);

// Every well-defined, bijective vertex map of a finite W(Gamma, o).
std::vector<VertexMap> brute_automorphism_group(const GraphRef& g);

// Closure of a set of automorphisms under composition, as vertex-image
// tuples. `complete` is false when the bound was hit.
struct ClosureResult {
  std::vector<VertexMap> maps;
  bool complete = true;
};
ClosureResult closure(const GraphRef& g, const std::vector<Automorphism>& autos,
                      std::size_t bound = 1000000);

// Subgroup elements reachable from the generators without any partial
// product leaving the ball of the given radius.
std::vector<GroupElement> subgroup_ball(const GraphRef& g,
                                        const std::vector<GroupElement>& gens,
                                        int radius);

std::string map_key(const VertexMap& m);

}  // namespace graphprod
