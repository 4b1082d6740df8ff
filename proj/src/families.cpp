#include "gridmatch/families.hpp"

#include <stdexcept>

namespace gridmatch {

namespace {

void require_dimension(int value, const char* what)
{
    if (value < 1)
        throw std::invalid_argument(std::string(what) + " must be at least 1, got " +
                                    std::to_string(value));
}

// Row labels f^k_i for k = 1..m at a fixed position i.
LabelSet column_of_rows(int m, int i)
{
    LabelSet out;
    for (int k = 1; k <= m; ++k)
        out.insert(VertexLabel::f(k, i));
    return out;
}

std::vector<VertexLabel> raw_names(int k)
{
    if (k < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    std::vector<VertexLabel> out;
    for (int i = 1; i <= k; ++i)
        out.push_back(VertexLabel::raw("v" + std::to_string(i)));
    return out;
}

}  // namespace

Graph grid_graph(int rows, int cols)
{
    require_dimension(rows, "grid rows");
    require_dimension(cols, "grid columns");
    std::vector<VertexLabel> vertices;
    std::vector<LabelEdge> edges;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            vertices.push_back(VertexLabel::grid(i, j));
            if (i < rows)
                edges.emplace_back(VertexLabel::grid(i, j), VertexLabel::grid(i + 1, j));
            if (j < cols)
                edges.emplace_back(VertexLabel::grid(i, j), VertexLabel::grid(i, j + 1));
        }
    }
    return Graph(std::move(vertices), edges);
}

VertexLabel edge_label(const VertexLabel& a, const VertexLabel& b)
{
    const VertexLabel& lo = b < a ? b : a;
    const VertexLabel& hi = b < a ? a : b;
    if (lo.is<GridNode>() && hi.is<GridNode>())
        return VertexLabel::grid_edge(std::get<GridNode>(lo.value()), std::get<GridNode>(hi.value()));
    return VertexLabel::raw("le(" + lo.str() + "," + hi.str() + ")");
}

Graph line_graph(const Graph& g)
{
    auto edges = g.edges();
    std::vector<VertexLabel> vertices;
    vertices.reserve(edges.size());
    for (auto [u, v] : edges)
        vertices.push_back(edge_label(g.label(u), g.label(v)));

    // Edges sharing an endpoint: group incident edges per original vertex.
    std::vector<std::vector<std::size_t>> incident(g.vertex_count());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    std::vector<LabelEdge> adjacency;
    for (const auto& group : incident)
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                adjacency.emplace_back(vertices[group[a]], vertices[group[b]]);
    return Graph(std::move(vertices), adjacency);
}

Graph delta_graph(int m, int n)
{
    require_dimension(m, "m");
    require_dimension(n, "n");
    std::vector<VertexLabel> vertices;
    std::vector<LabelEdge> edges;
    for (int i = 1; i <= n; ++i)
        vertices.push_back(VertexLabel::e(i));
    for (int k = 1; k <= m; ++k) {
        for (int i = 1; i <= n - 1; ++i) {
            auto f = VertexLabel::f(k, i);
            vertices.push_back(f);
            edges.emplace_back(VertexLabel::e(i), f);
            edges.emplace_back(f, VertexLabel::e(i + 1));
            if (i <= n - 2)
                edges.emplace_back(f, VertexLabel::f(k, i + 1));
        }
    }
    return Graph(std::move(vertices), edges);
}

std::string to_string(NamedSubgraphKind kind)
{
    switch (kind) {
    case NamedSubgraphKind::X: return "X";
    case NamedSubgraphKind::Y: return "Y";
    case NamedSubgraphKind::Z: return "Z";
    case NamedSubgraphKind::Zprime: return "Zprime";
    case NamedSubgraphKind::Zdoubleprime: return "Zdoubleprime";
    case NamedSubgraphKind::W: return "W";
    }
    return "?";
}

NamedSubgraphKind parse_named_kind(std::string_view text)
{
    if (text == "X") return NamedSubgraphKind::X;
    if (text == "Y") return NamedSubgraphKind::Y;
    if (text == "Z") return NamedSubgraphKind::Z;
    if (text == "Zprime" || text == "Z'") return NamedSubgraphKind::Zprime;
    if (text == "Zdoubleprime" || text == "Z''") return NamedSubgraphKind::Zdoubleprime;
    if (text == "W") return NamedSubgraphKind::W;
    throw std::invalid_argument("unknown named subgraph kind: " + std::string(text));
}

int minimum_n(NamedSubgraphKind kind)
{
    switch (kind) {
    case NamedSubgraphKind::X: return 2;
    case NamedSubgraphKind::Y:
    case NamedSubgraphKind::W: return 4;
    case NamedSubgraphKind::Z:
    case NamedSubgraphKind::Zprime:
    case NamedSubgraphKind::Zdoubleprime: return 5;
    }
    return 0;
}

Graph named_subgraph(NamedSubgraphKind kind, int m, int n)
{
    if (m < 2)
        throw std::invalid_argument("named subgraphs require m >= 2, got " + std::to_string(m));
    if (n < minimum_n(kind))
        throw std::invalid_argument(to_string(kind) + "_n requires n >= " +
                                    std::to_string(minimum_n(kind)) + ", got " + std::to_string(n));

    const Graph x = delete_vertices(delta_graph(m, n), {VertexLabel::e(n - 1)});
    if (kind == NamedSubgraphKind::X)
        return x;
    const Graph y = delete_vertices(x, {VertexLabel::e(n - 2)});

    switch (kind) {
    case NamedSubgraphKind::Y:
        return y;
    case NamedSubgraphKind::Z: {
        LabelSet s = column_of_rows(m, n - 4);
        s.insert(VertexLabel::e(n - 3));
        s.merge(closed_neighborhood(y, VertexLabel::e(n)));
        return delete_vertices(y, s);
    }
    case NamedSubgraphKind::Zprime: {
        LabelSet s = column_of_rows(m, n - 4);
        s.insert(VertexLabel::e(n - 3));
        s.insert(VertexLabel::e(n));
        return delete_vertices(y, s);
    }
    case NamedSubgraphKind::Zdoubleprime: {
        LabelSet s = closed_neighborhood(y, VertexLabel::e(n - 3));
        s.insert(VertexLabel::e(n));
        return delete_vertices(y, s);
    }
    case NamedSubgraphKind::W: {
        LabelSet s = column_of_rows(m, n - 3);
        s.insert(VertexLabel::e(n));
        return delete_vertices(y, s);
    }
    case NamedSubgraphKind::X:
        break;
    }
    return x;
}

Graph path_graph(const std::vector<std::string>& names)
{
    std::vector<VertexLabel> vertices;
    std::vector<LabelEdge> edges;
    for (std::size_t i = 0; i < names.size(); ++i) {
        vertices.push_back(VertexLabel::raw(names[i]));
        if (i > 0)
            edges.emplace_back(vertices[i - 1], vertices[i]);
    }
    return Graph(std::move(vertices), edges);
}

Graph path_graph(int k)
{
    auto vertices = raw_names(k);
    std::vector<LabelEdge> edges;
    for (std::size_t i = 1; i < vertices.size(); ++i)
        edges.emplace_back(vertices[i - 1], vertices[i]);
    return Graph(std::move(vertices), edges);
}

Graph cycle_graph(int k)
{
    if (k < 3)
        throw std::invalid_argument("a cycle needs at least 3 vertices");
    auto vertices = raw_names(k);
    std::vector<LabelEdge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        edges.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    return Graph(std::move(vertices), edges);
}

Graph complete_graph(int k)
{
    auto vertices = raw_names(k);
    std::vector<LabelEdge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            edges.emplace_back(vertices[i], vertices[j]);
    return Graph(std::move(vertices), edges);
}

Graph edgeless_graph(int k)
{
    return Graph(raw_names(k), {});
}

}  // namespace gridmatch
