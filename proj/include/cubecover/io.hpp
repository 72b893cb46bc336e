#pragma once

#include "cubecover/complex.hpp"
#include "cubecover/cube_space.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace cubecover {

using json = nlohmann::ordered_json;

/// {"vertices": N, "edges": [[u,v],...], "base": {"component_index": vertex, ...}}.
/// Throws InvalidInput on malformed documents.
RawGraph parse_graph_json(std::string_view text);
RawGraph graph_from_json(const json& doc);
json graph_to_json(const MedianGraph& g);

/// {"hyperplanes": [{"edges": [...], "minus": [...], "plus": [...]}]}; edges as vertex pairs.
json hyperplanes_to_json(const CubeComplex& cx);

/// {"component": c, "entries": {"h": "p/q", ...}}.
json point_to_json(const FinSupportPoint& p);
FinSupportPoint point_from_json(const json& doc);

json cube_point_to_json(const CubePoint& p);

/// Graphviz rendering; vertex labels are ids, edges labelled by hyperplane when given.
std::string to_dot(const MedianGraph& g, const HyperplaneSet* hs = nullptr);

}  // namespace cubecover
