#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gridmatch/label.hpp"

namespace gridmatch {

using LabelSet = std::set<VertexLabel>;
using LabelEdge = std::pair<VertexLabel, VertexLabel>;

/// Simple undirected graph over labelled vertices.
///
/// Vertices are stored in canonical label order and addressed by their
/// position in that order.  Neighbor lists are sorted.  A Graph is immutable
/// once constructed.
class Graph {
public:
    Graph() = default;

    /// Duplicate vertices and parallel edges collapse; self-loops and edges
    /// with an endpoint outside `vertices` throw std::invalid_argument.
    Graph(std::vector<VertexLabel> vertices, const std::vector<LabelEdge>& edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return vertices_.empty(); }

    const std::vector<VertexLabel>& vertices() const { return vertices_; }
    const VertexLabel& label(std::size_t v) const { return vertices_[v]; }

    std::optional<std::size_t> index_of(const VertexLabel& label) const;
    /// Like index_of but throws std::invalid_argument for unknown labels.
    std::size_t require(const VertexLabel& label) const;
    bool contains(const VertexLabel& label) const { return index_of(label).has_value(); }

    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    bool adjacent(std::size_t u, std::size_t v) const;
    bool adjacent(const VertexLabel& u, const VertexLabel& v) const;

    /// Edges as index pairs (u < v), sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;
    /// Edges as label pairs, each sorted, whole list sorted.
    std::vector<LabelEdge> label_edges() const;

    /// Induced subgraph on the vertices with keep[v] set.
    Graph induced(const std::vector<bool>& keep) const;

    bool operator==(const Graph& other) const
    {
        return vertices_ == other.vertices_ && adjacency_ == other.adjacency_;
    }

private:
    std::vector<VertexLabel> vertices_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// G \ S: the subgraph induced on V(G) minus S.  Every label of S must be a
/// vertex of G.
Graph delete_vertices(const Graph& g, const LabelSet& s);

LabelSet open_neighborhood(const Graph& g, const VertexLabel& v);
LabelSet closed_neighborhood(const Graph& g, const VertexLabel& v);

}  // namespace gridmatch
