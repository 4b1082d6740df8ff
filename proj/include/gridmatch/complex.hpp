#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gridmatch/graph.hpp"

namespace gridmatch {

using VertexIndex = std::uint32_t;

/// Finite abstract simplicial complex with every face stored explicitly.
///
/// Vertices are addressed by their position in vertices(); a face is a
/// strictly increasing run of such positions.  Faces of each dimension are
/// kept in lexicographic order.  Dimension -1 holds the empty face exactly
/// when the complex is nonvoid, so a default-constructed complex is void and
/// from_facets({}, {{}}) is the complex {empty face}.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Downward closure of `facets`.  Every facet label must appear in
    /// `vertices`; the vertex order of the complex is the order given.
    static SimplicialComplex from_facets(std::vector<VertexLabel> vertices,
                                         const std::vector<std::vector<VertexLabel>>& facets);

    bool is_void() const { return faces_.empty(); }
    /// Top dimension; -1 for {empty face}, -2 for the void complex.
    int dimension() const { return static_cast<int>(faces_.size()) - 2; }

    std::size_t face_count(int dim) const;
    std::size_t total_faces() const;

    std::span<const VertexIndex> face(int dim, std::size_t i) const;
    std::optional<std::size_t> find_face(int dim, std::span<const VertexIndex> face) const;
    std::vector<VertexLabel> face_labels(int dim, std::size_t i) const;

    const std::vector<VertexLabel>& vertices() const { return vertices_; }

    /// One face per line (labels comma-separated), dimensions ascending; the
    /// empty face is an empty line.
    void write_faces(std::ostream& out) const;

private:
    friend class ComplexBuilder;

    std::vector<VertexLabel> vertices_;
    // faces_[d + 1] holds the d-faces back to back, d + 1 indices each.
    std::vector<std::vector<VertexIndex>> faces_;
};

struct ComplexLimits {
    std::size_t max_faces = 10'000'000;
};

/// I(g): faces are the independent sets of g, vertex order canonical.
SimplicialComplex independence_complex(const Graph& g, const ComplexLimits& limits = {});

/// I(g) with its vertices ordered by `order` (a permutation of 0..|V|-1).
SimplicialComplex independence_complex(const Graph& g, std::span<const std::size_t> order,
                                       const ComplexLimits& limits = {});

/// M(g): faces are the matchings of g; vertices are edge_label() of each edge.
SimplicialComplex matching_complex(const Graph& g, const ComplexLimits& limits = {});

using Relabeling = std::map<VertexLabel, VertexLabel>;

/// Face-set equality after mapping vertex labels of `a` through `relabel`
/// (identity when absent).  A relabeling that is not a bijection between the
/// two vertex sets throws std::invalid_argument.
bool equals_complex(const SimplicialComplex& a, const SimplicialComplex& b,
                    const std::optional<Relabeling>& relabel = std::nullopt);

}  // namespace gridmatch
