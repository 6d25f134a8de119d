#pragma once

#include <string>

#include <json.hpp>

#include "graphprod/centralizer.hpp"
#include "graphprod/generators.hpp"

namespace graphprod {

RawGraph raw_graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const LabeledGraph& g);
GraphRef load_graph_file(const std::string& path);

// Automorphism file: {"images": {name: word, ...}, "inverse": {...}}.
// The inverse block is optional; without it only map-level queries work.
struct LoadedMap {
  VertexMap images;
  std::optional<VertexMap> inverse;
};
LoadedMap vertex_map_from_json(const GraphRef& g, const nlohmann::json& j);
nlohmann::json automorphism_to_json(const Automorphism& a);

nlohmann::json descriptor_to_json(const LabeledGraph& g,
                                  const GeneratorDescriptor& d);
nlohmann::json generator_to_json(const LabeledGraph& g, const Generator& gen);

nlohmann::json centralizer_to_json(const CentralizerPresentation& pres);

}  // namespace graphprod
