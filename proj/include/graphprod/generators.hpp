#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graphprod/automorphism.hpp"

namespace graphprod {

struct GraphAutDesc {
  GraphAutomorphism mapping;
};
struct FactorDesc {
  int vertex = 0;
  std::int64_t m = -1;  // -1 for the inversion, a unit mod o(v) otherwise
};
struct TransvectionDesc {
  int x = 0, y = 0;
  std::int64_t q = 1;  // x maps to x y^q
};
struct PartialConjDesc {
  int vertex = 0;
  int component_index = 0;
  VertexSet component;
};
struct InnerDesc {
  std::string word;
};
struct WhiteheadDesc {
  Syllable a;
  std::vector<Syllable> letters;  // the set A, without a itself
};

using GeneratorDescriptor =
    std::variant<GraphAutDesc, FactorDesc, TransvectionDesc, PartialConjDesc,
                 InnerDesc, WhiteheadDesc>;

std::string describe(const LabeledGraph& g, const GeneratorDescriptor& d);

struct Generator {
  GeneratorDescriptor desc;
  std::vector<GeneratorDescriptor> aliases;  // merged duplicates
  Automorphism aut;
};

std::vector<Generator> factor_automorphisms(const GraphRef& g);
std::optional<Generator> transvection(const GraphRef& g, int x, int y);
std::vector<Generator> partial_conjugations(const GraphRef& g);
Generator graph_automorphism_lift(const GraphRef& g, const GraphAutomorphism& gamma);
Automorphism inner_automorphism(const GroupElement& w);

// The generating set of the automorphism group: labeled graph automorphisms,
// factor automorphisms, well-defined dominated transvections and partial
// conjugations, deduplicated by image tuple, identity excluded.
std::vector<Generator> generating_set(const GraphRef& g);

// G*: transvections restricted to adjacent pairs. G1: G* minus partial
// conjugations.
std::vector<Generator> star_generating_set(const GraphRef& g);
std::vector<Generator> subgroup_one_set(const GraphRef& g);

// Whitehead automorphisms of type I: lifts and factor automorphisms.
std::vector<Generator> whitehead_type_I(const GraphRef& g);

// Type II Whitehead automorphism (A, a). Letters are syllables: s^{+-1}
// for infinite-order s, v^q (1 <= q < o(v)) for finite-order v. Returns
// nothing when the well-definedness conditions fail.
std::optional<Automorphism> whitehead_type_II(const GraphRef& g,
                                              const std::vector<Syllable>& A,
                                              const Syllable& a);

struct WhiteheadWitness {
  std::size_t generator_index = 0;
  std::string how;  // "type I" or the (A, a) rendering
};
struct WhiteheadCoverage {
  bool all_covered = true;
  std::vector<WhiteheadWitness> witnesses;
};

// Realizes every element of G as a type I automorphism or a single
// valid (A, a).
WhiteheadCoverage check_generators_in_whitehead(const GraphRef& g);

}  // namespace graphprod
