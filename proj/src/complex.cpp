#include "gridmatch/complex.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gridmatch/errors.hpp"
#include "gridmatch/families.hpp"

namespace gridmatch {

class ComplexBuilder {
public:
    ComplexBuilder(std::vector<VertexLabel> vertices, std::size_t max_faces)
        : max_faces_(max_faces)
    {
        complex_.vertices_ = std::move(vertices);
    }

    void emit(std::span<const VertexIndex> face)
    {
        if (++count_ > max_faces_)
            throw ResourceLimitError("complex exceeds the face cap of " + std::to_string(max_faces_));
        if (complex_.faces_.size() < face.size() + 1)
            complex_.faces_.resize(face.size() + 1);
        auto& bucket = complex_.faces_[face.size()];
        bucket.insert(bucket.end(), face.begin(), face.end());
    }

    SimplicialComplex finish() { return std::move(complex_); }
    SimplicialComplex& complex() { return complex_; }

private:
    SimplicialComplex complex_;
    std::size_t max_faces_;
    std::size_t count_ = 0;
};

namespace {

// Emits every pairwise-compatible subset of the vertices in increasing index
// order; `conflict(u, v)` marks incompatible pairs.
template <class Conflict>
void enumerate_compatible_sets(ComplexBuilder& builder, std::size_t n, const Conflict& conflict)
{
    std::vector<VertexIndex> prefix;
    builder.emit(prefix);

    struct Frame {
        std::vector<VertexIndex> candidates;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    Frame root;
    root.candidates.resize(n);
    std::iota(root.candidates.begin(), root.candidates.end(), VertexIndex{0});
    stack.push_back(std::move(root));

    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.candidates.size()) {
            stack.pop_back();
            if (!prefix.empty())
                prefix.pop_back();
            continue;
        }
        const VertexIndex v = top.candidates[top.next++];
        prefix.push_back(v);
        builder.emit(prefix);
        Frame child;
        for (std::size_t j = top.next; j < top.candidates.size(); ++j)
            if (!conflict(v, top.candidates[j]))
                child.candidates.push_back(top.candidates[j]);
        stack.push_back(std::move(child));
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexLabel> vertices,
                                                 const std::vector<std::vector<VertexLabel>>& facets)
{
    if (facets.empty())
        return {};

    std::map<VertexLabel, VertexIndex> position;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (!position.emplace(vertices[i], static_cast<VertexIndex>(i)).second)
            throw std::invalid_argument("duplicate vertex " + vertices[i].str());

    std::vector<std::vector<std::vector<VertexIndex>>> by_dim(1);
    std::vector<bool> used(vertices.size(), false);
    for (const auto& facet : facets) {
        std::vector<VertexIndex> idx;
        for (const auto& label : facet) {
            auto it = position.find(label);
            if (it == position.end())
                throw std::invalid_argument("facet vertex " + label.str() + " is not listed");
            idx.push_back(it->second);
            used[it->second] = true;
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw std::invalid_argument("facet repeats a vertex");
        if (idx.size() > 24)
            throw std::invalid_argument("facet too large to expand");
        if (by_dim.size() < idx.size() + 1)
            by_dim.resize(idx.size() + 1);
        const std::uint32_t subsets = 1u << idx.size();
        for (std::uint32_t mask = 0; mask < subsets; ++mask) {
            std::vector<VertexIndex> face;
            for (std::size_t b = 0; b < idx.size(); ++b)
                if (mask & (1u << b))
                    face.push_back(idx[b]);
            by_dim[face.size()].push_back(std::move(face));
        }
    }

    // Drop vertices that occur in no facet and renumber.
    std::vector<VertexIndex> renumber(vertices.size());
    std::vector<VertexLabel> kept;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (used[i]) {
            renumber[i] = static_cast<VertexIndex>(kept.size());
            kept.push_back(vertices[i]);
        }
    }

    SimplicialComplex out;
    out.vertices_ = std::move(kept);
    out.faces_.resize(by_dim.size());
    for (std::size_t k = 0; k < by_dim.size(); ++k) {
        auto& list = by_dim[k];
        for (auto& face : list)
            for (auto& v : face)
                v = renumber[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        for (const auto& face : list)
            out.faces_[k].insert(out.faces_[k].end(), face.begin(), face.end());
    }
    return out;
}

std::size_t SimplicialComplex::face_count(int dim) const
{
    if (dim < -1 || dim > dimension())
        return 0;
    if (dim == -1)
        return 1;
    return faces_[static_cast<std::size_t>(dim) + 1].size() / static_cast<std::size_t>(dim + 1);
}

std::size_t SimplicialComplex::total_faces() const
{
    std::size_t total = 0;
    for (int d = -1; d <= dimension(); ++d)
        total += face_count(d);
    return total;
}

std::span<const VertexIndex> SimplicialComplex::face(int dim, std::size_t i) const
{
    if (dim < 0)
        return {};
    const std::size_t width = static_cast<std::size_t>(dim) + 1;
    return std::span<const VertexIndex>(faces_[width]).subspan(i * width, width);
}

std::optional<std::size_t> SimplicialComplex::find_face(int dim, std::span<const VertexIndex> face) const
{
    if (face.size() != static_cast<std::size_t>(dim + 1))
        return std::nullopt;
    const std::size_t count = face_count(dim);
    if (dim == -1)
        return count == 1 ? std::optional<std::size_t>(0) : std::nullopt;
    std::size_t lo = 0, hi = count;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        auto probe = this->face(dim, mid);
        if (std::lexicographical_compare(probe.begin(), probe.end(), face.begin(), face.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < count && std::ranges::equal(this->face(dim, lo), face))
        return lo;
    return std::nullopt;
}

std::vector<VertexLabel> SimplicialComplex::face_labels(int dim, std::size_t i) const
{
    std::vector<VertexLabel> out;
    for (VertexIndex v : face(dim, i))
        out.push_back(vertices_[v]);
    return out;
}

void SimplicialComplex::write_faces(std::ostream& out) const
{
    for (int d = -1; d <= dimension(); ++d) {
        for (std::size_t i = 0; i < face_count(d); ++i) {
            bool first = true;
            for (VertexIndex v : face(d, i)) {
                if (!first)
                    out << ',';
                out << vertices_[v].str();
                first = false;
            }
            out << '\n';
        }
    }
}

SimplicialComplex independence_complex(const Graph& g, const ComplexLimits& limits)
{
    std::vector<std::size_t> order(g.vertex_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return independence_complex(g, order, limits);
}

SimplicialComplex independence_complex(const Graph& g, std::span<const std::size_t> order,
                                       const ComplexLimits& limits)
{
    const std::size_t n = g.vertex_count();
    if (order.size() != n)
        throw std::invalid_argument("vertex order must list every vertex once");
    std::vector<bool> seen(n, false);
    std::vector<VertexLabel> vertices;
    for (std::size_t v : order) {
        if (v >= n || seen[v])
            throw std::invalid_argument("vertex order must be a permutation");
        seen[v] = true;
        vertices.push_back(g.label(v));
    }

    std::vector<char> adjacent(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            adjacent[a * n + b] = g.adjacent(order[a], order[b]) ? 1 : 0;

    ComplexBuilder builder(std::move(vertices), limits.max_faces);
    enumerate_compatible_sets(builder, n, [&](VertexIndex a, VertexIndex b) {
        return adjacent[a * n + b] != 0;
    });
    return builder.finish();
}

SimplicialComplex matching_complex(const Graph& g, const ComplexLimits& limits)
{
    struct Edge {
        VertexLabel label;
        std::size_t u, v;
    };
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({edge_label(g.label(u), g.label(v)), u, v});
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return x.label < y.label; });

    std::vector<VertexLabel> vertices;
    for (const auto& e : edges)
        vertices.push_back(e.label);

    ComplexBuilder builder(std::move(vertices), limits.max_faces);
    enumerate_compatible_sets(builder, edges.size(), [&](VertexIndex a, VertexIndex b) {
        const Edge& x = edges[a];
        const Edge& y = edges[b];
        return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
    });
    return builder.finish();
}

bool equals_complex(const SimplicialComplex& a, const SimplicialComplex& b,
                    const std::optional<Relabeling>& relabel)
{
    std::map<VertexLabel, VertexIndex> b_position;
    for (std::size_t i = 0; i < b.vertices().size(); ++i)
        b_position.emplace(b.vertices()[i], static_cast<VertexIndex>(i));

    if (relabel) {
        std::set<VertexLabel> targets;
        for (const auto& [from, to] : *relabel)
            targets.insert(to);
        bool bijective = relabel->size() == a.vertices().size() && targets.size() == relabel->size() &&
                         targets.size() == b.vertices().size();
        for (const auto& v : a.vertices())
            bijective = bijective && relabel->contains(v);
        for (const auto& t : targets)
            bijective = bijective && b_position.contains(t);
        if (!bijective)
            throw std::invalid_argument("relabeling is not a bijection between the vertex sets");
    }

    if (a.dimension() != b.dimension())
        return false;
    for (int d = -1; d <= a.dimension(); ++d)
        if (a.face_count(d) != b.face_count(d))
            return false;

    std::vector<VertexIndex> image(a.vertices().size());
    for (std::size_t i = 0; i < a.vertices().size(); ++i) {
        const VertexLabel& target = relabel ? relabel->at(a.vertices()[i]) : a.vertices()[i];
        auto it = b_position.find(target);
        if (it == b_position.end())
            return false;
        image[i] = it->second;
    }

    std::vector<VertexIndex> mapped;
    for (int d = 0; d <= a.dimension(); ++d) {
        for (std::size_t i = 0; i < a.face_count(d); ++i) {
            mapped.clear();
            for (VertexIndex v : a.face(d, i))
                mapped.push_back(image[v]);
            std::sort(mapped.begin(), mapped.end());
            if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
                return false;
            if (!b.find_face(d, mapped))
                return false;
        }
    }
    return true;
}

}  // namespace gridmatch
