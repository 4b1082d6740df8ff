#include "gridmatch/graph_io.hpp"

#include <fstream>

namespace gridmatch {

Json graph_to_json(const Graph& g)
{
    Json vertices = Json::array();
    for (const auto& v : g.vertices())
        vertices.push_back(v.str());
    Json edges = Json::array();
    for (const auto& [a, b] : g.label_edges())
        edges.push_back(Json::array({a.str(), b.str()}));
    Json out;
    out["vertices"] = std::move(vertices);
    out["edges"] = std::move(edges);
    return out;
}

Graph graph_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("graph JSON needs a \"vertices\" array");
    std::vector<VertexLabel> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string())
            throw ParseError("vertex labels must be strings");
        vertices.push_back(VertexLabel::parse(v.get<std::string>()));
    }
    std::vector<LabelEdge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw ParseError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw ParseError("each edge must be a pair of label strings");
            edges.emplace_back(VertexLabel::parse(e[0].get<std::string>()),
                               VertexLabel::parse(e[1].get<std::string>()));
        }
    }
    try {
        return Graph(std::move(vertices), edges);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

Graph read_graph(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw ParseError("malformed JSON in " + path.string());
    return graph_from_json(j);
}

void write_graph(const Graph& g, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << graph_to_json(g).dump(2) << '\n';
}

}  // namespace gridmatch
