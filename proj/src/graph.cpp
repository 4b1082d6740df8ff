#include "gridmatch/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridmatch {

Graph::Graph(std::vector<VertexLabel> vertices, const std::vector<LabelEdge>& edges)
    : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    adjacency_.resize(vertices_.size());

    for (const auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("self-loop at vertex " + a.str());
        auto u = index_of(a);
        auto v = index_of(b);
        if (!u || !v)
            throw std::invalid_argument("edge {" + a.str() + ", " + b.str() +
                                        "} has an endpoint outside the vertex set");
        adjacency_[*u].push_back(*v);
        adjacency_[*v].push_back(*u);
    }
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
}

std::optional<std::size_t> Graph::index_of(const VertexLabel& label) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end() || *it != label)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::require(const VertexLabel& label) const
{
    auto idx = index_of(label);
    if (!idx)
        throw std::invalid_argument("vertex " + label.str() + " is not in the graph");
    return *idx;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const
{
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::adjacent(const VertexLabel& u, const VertexLabel& v) const
{
    return adjacent(require(u), require(v));
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u)
        for (std::size_t v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::vector<LabelEdge> Graph::label_edges() const
{
    // Index order is label order, so index-sorted edges are label-sorted.
    std::vector<LabelEdge> out;
    out.reserve(edge_count_);
    for (auto [u, v] : edges())
        out.emplace_back(vertices_[u], vertices_[v]);
    return out;
}

Graph Graph::induced(const std::vector<bool>& keep) const
{
    Graph out;
    std::vector<std::size_t> remap(vertices_.size(), vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (keep[v]) {
            remap[v] = out.vertices_.size();
            out.vertices_.push_back(vertices_[v]);
        }
    }
    out.adjacency_.resize(out.vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (!keep[v])
            continue;
        auto& nbrs = out.adjacency_[remap[v]];
        for (std::size_t w : adjacency_[v])
            if (keep[w])
                nbrs.push_back(remap[w]);
        out.edge_count_ += nbrs.size();
    }
    out.edge_count_ /= 2;
    return out;
}

Graph delete_vertices(const Graph& g, const LabelSet& s)
{
    std::vector<bool> keep(g.vertex_count(), true);
    for (const auto& label : s)
        keep[g.require(label)] = false;
    return g.induced(keep);
}

LabelSet open_neighborhood(const Graph& g, const VertexLabel& v)
{
    LabelSet out;
    for (std::size_t w : g.neighbors(g.require(v)))
        out.insert(g.label(w));
    return out;
}

LabelSet closed_neighborhood(const Graph& g, const VertexLabel& v)
{
    LabelSet out = open_neighborhood(g, v);
    out.insert(v);
    return out;
}

}  // namespace gridmatch
