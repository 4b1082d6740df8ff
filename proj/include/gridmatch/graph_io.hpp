#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gridmatch/graph.hpp"

namespace gridmatch {

using Json = nlohmann::ordered_json;

/// Raised when graph or certificate input cannot be decoded.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical interchange form:
///   {"vertices": ["e1", ...], "edges": [["e1", "f1_1"], ...]}
/// Vertices in canonical label order; each edge sorted; edge list sorted.
Json graph_to_json(const Graph& g);

/// Accepts vertices and edges in any order.  Throws ParseError.
Graph graph_from_json(const Json& j);

Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace gridmatch
