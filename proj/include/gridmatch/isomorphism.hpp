#pragma once

#include <map>
#include <optional>

#include "gridmatch/graph.hpp"

namespace gridmatch {

using VertexMap = std::map<VertexLabel, VertexLabel>;

/// Finds an adjacency-preserving bijection V(a) -> V(b), if one exists.
///
/// Backtracking over a joint color refinement of both graphs; intended for
/// the small, fairly rigid graphs of this library (tens of vertices).
std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b);

inline bool is_isomorphic(const Graph& a, const Graph& b)
{
    return find_isomorphism(a, b).has_value();
}

/// True when `map` is a bijection V(a) -> V(b) preserving adjacency both ways.
bool is_isomorphism(const Graph& a, const Graph& b, const VertexMap& map);

}  // namespace gridmatch
