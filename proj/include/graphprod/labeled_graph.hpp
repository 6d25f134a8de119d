#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphprod/common.hpp"

namespace graphprod {

// Raw graph description as read from a file, prior to validation.
struct RawGraph {
  std::vector<std::pair<std::string, Order>> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Collects every invariant violation in `raw`; empty result means valid.
std::vector<std::string> validate(const RawGraph& raw);

// Bijection on vertex indices preserving adjacency and labels.
using GraphAutomorphism = std::vector<int>;

// Finite simple graph with each vertex labeled by a prime power or
// infinity. Immutable after construction; construction throws Error on
// any invariant violation.
class LabeledGraph {
 public:
  explicit LabeledGraph(RawGraph raw);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  Order order(int v) const { return orders_[v]; }
  int index_of(const std::string& name) const;  // throws on unknown name
  int find(const std::string& name) const;      // -1 on unknown name

  bool adjacent(int x, int y) const { return adj_[x].contains(y); }
  VertexSet vertices() const { return VertexSet::all(vertex_count()); }
  VertexSet link(int v) const { return adj_[v]; }
  VertexSet star(int v) const;
  VertexSet link_of_set(VertexSet s) const;
  VertexSet star_of_set(VertexSet s) const;

  LabeledGraph complement() const;
  LabeledGraph induced_subgraph(VertexSet keep) const;

  // Connected components of the subgraph induced on V minus star(v),
  // ordered by least vertex index.
  std::vector<VertexSet> components_minus_star(int v) const;
  std::vector<VertexSet> components_of(VertexSet universe) const;

  // Domination x <= y (lk x inside y*) and strong domination (x* inside y*).
  bool dominates(int x, int y) const;
  bool dominates_strongly(int x, int y) const;
  VertexSet equivalence_class(int x) const;
  VertexSet strong_class(int x) const;
  VertexSet gamma_v(int v) const;  // vertices x with v <= x
  VertexSet omega_v(int v) const;  // gamma_v minus lk v

  // All label-preserving graph automorphisms, identity first, in
  // lexicographic order of the image sequence.
  std::vector<GraphAutomorphism> labeled_automorphisms() const;

  std::vector<VertexSet> maximal_cliques() const;

  RawGraph to_raw() const;

  bool same_structure(const LabeledGraph& o) const;

 private:
  LabeledGraph() = default;

  std::vector<std::string> names_;
  std::vector<Order> orders_;
  std::vector<VertexSet> adj_;
  std::unordered_map<std::string, int> index_;

  void rebuild_index();
};

// Disjoint union plus every cross edge. Vertex names must not clash.
LabeledGraph join(const LabeledGraph& g1, const LabeledGraph& g2);

using GraphRef = std::shared_ptr<const LabeledGraph>;

GraphRef make_graph(RawGraph raw);

}  // namespace graphprod
