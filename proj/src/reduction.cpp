#include "gridmatch/reduction.hpp"

#include <algorithm>
#include <cassert>

namespace gridmatch {

namespace {

bool dominates(const std::vector<std::size_t>& smaller, const std::vector<std::size_t>& larger)
{
    return std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end());
}

// Induced subgraph of a fixed host graph, tracked as a membership mask so the
// zig-zag can add vertices back.
class SubgraphView {
public:
    SubgraphView(const Graph& host, const Graph& start) : host_(host), member_(host.vertex_count(), false)
    {
        for (const auto& v : start.vertices())
            member_[host.require(v)] = true;
    }

    bool contains(std::size_t v) const { return member_[v]; }
    void set(std::size_t v, bool in) { member_[v] = in; }

    std::vector<std::size_t> neighbors(std::size_t v) const
    {
        std::vector<std::size_t> out;
        for (std::size_t w : host_.neighbors(v))
            if (member_[w])
                out.push_back(w);
        return out;
    }

    Graph materialize() const { return host_.induced(member_); }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < member_.size(); ++v)
            if (member_[v])
                out.push_back(v);
        return out;
    }

private:
    const Graph& host_;
    std::vector<bool> member_;
};

std::string describe(const ZigzagMove& move, std::size_t index)
{
    return std::string("zig-zag move ") + std::to_string(index) + " (" +
           (move.op == ZigzagMove::Op::Remove ? "remove " : "add ") + move.vertex.str() + ", witness " +
           move.witness.str() + ")";
}

}  // namespace

bool is_valid_fold(const Graph& g, const FoldStep& step)
{
    auto w = g.index_of(step.removed);
    auto v = g.index_of(step.witness);
    if (!w || !v || *w == *v)
        return false;
    if (!dominates(g.neighbors(*v), g.neighbors(*w)))
        return false;
    assert(!g.adjacent(*v, *w));
    return true;
}

std::optional<FoldStep> find_fold(const Graph& g)
{
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t w = 0; w < g.vertex_count(); ++w) {
            if (v == w || g.degree(v) > g.degree(w))
                continue;
            if (dominates(g.neighbors(v), g.neighbors(w))) {
                assert(!g.adjacent(v, w));
                return FoldStep{g.label(w), g.label(v)};
            }
        }
    }
    return std::nullopt;
}

ReductionTrace fold_reduce(const Graph& g)
{
    ReductionTrace trace;
    trace.initial = g;
    Graph current = g;
    while (true) {
        if (!current.empty() && current.edge_count() == 0) {
            trace.steps.emplace_back(IsolatedVertexHalt{current.label(0)});
            return trace;
        }
        auto step = find_fold(current);
        if (!step) {
            trace.final = std::move(current);
            return trace;
        }
        current = delete_vertices(current, {step->removed});
        trace.steps.emplace_back(std::move(*step));
    }
}

std::optional<Graph> replay(const ReductionTrace& trace)
{
    Graph current = trace.initial;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (const auto* fold = std::get_if<FoldStep>(&trace.steps[i])) {
            if (!is_valid_fold(current, *fold))
                throw std::logic_error("trace step " + std::to_string(i) + " is not a valid fold");
            current = delete_vertices(current, {fold->removed});
            continue;
        }
        const auto& halt = std::get<IsolatedVertexHalt>(trace.steps[i]);
        if (i + 1 != trace.steps.size() || current.edge_count() != 0 || !current.contains(halt.vertex))
            throw std::logic_error("contractible halt is not justified");
        return std::nullopt;
    }
    return current;
}

VerifiedSplit check_split(const Graph& g, const SplitCertificate& cert)
{
    if (!g.contains(cert.pivot))
        throw CertificateError(CertificateError::Kind::PivotMissing,
                               "pivot " + cert.pivot.str() + " is not a vertex of the graph");

    VerifiedSplit out;
    out.deleted = delete_vertices(g, {cert.pivot});
    out.link = delete_vertices(g, closed_neighborhood(g, cert.pivot));

    const Graph& host = out.deleted;
    SubgraphView view(host, out.link);
    for (std::size_t i = 0; i < cert.zigzag.size(); ++i) {
        const ZigzagMove& move = cert.zigzag[i];
        auto fail = [&](const std::string& why) {
            return CertificateError(CertificateError::Kind::ZigzagMoveInvalid, describe(move, i) + ": " + why);
        };
        auto vertex = host.index_of(move.vertex);
        auto witness = host.index_of(move.witness);
        if (!vertex || !witness)
            throw fail("vertex outside G \\ v");
        if (*vertex == *witness)
            throw fail("witness equals the moved vertex");
        if (move.op == ZigzagMove::Op::Remove) {
            if (!view.contains(*vertex))
                throw fail("vertex already absent");
        } else {
            if (view.contains(*vertex))
                throw fail("vertex already present");
            view.set(*vertex, true);
        }
        if (!view.contains(*witness))
            throw fail("witness absent");
        if (!dominates(view.neighbors(*witness), view.neighbors(*vertex)))
            throw fail("N(witness) is not contained in N(vertex)");
        if (move.op == ZigzagMove::Op::Remove)
            view.set(*vertex, false);
    }

    auto star = host.index_of(cert.star_witness);
    if (!star)
        throw CertificateError(CertificateError::Kind::StarConditionFailed,
                               "star witness " + cert.star_witness.str() + " is not a vertex of G \\ v");
    for (std::size_t x : view.members()) {
        if (x != *star && host.adjacent(x, *star))
            throw CertificateError(CertificateError::Kind::StarConditionFailed,
                                   host.label(x).str() + " is adjacent to star witness " +
                                       cert.star_witness.str());
    }
    out.final = view.materialize();
    return out;
}

Json certificate_to_json(const SplitCertificate& cert)
{
    Json moves = Json::array();
    for (const auto& move : cert.zigzag) {
        Json m;
        m["op"] = move.op == ZigzagMove::Op::Remove ? "remove" : "add";
        m["vertex"] = move.vertex.str();
        m["witness"] = move.witness.str();
        moves.push_back(std::move(m));
    }
    Json out;
    out["pivot"] = cert.pivot.str();
    out["zigzag"] = std::move(moves);
    out["star_witness"] = cert.star_witness.str();
    return out;
}

SplitCertificate certificate_from_json(const Json& j)
{
    auto label = [](const Json& obj, const char* key) {
        if (!obj.is_object() || !obj.contains(key) || !obj[key].is_string())
            throw ParseError(std::string("certificate field \"") + key + "\" must be a label string");
        return VertexLabel::parse(obj[key].get<std::string>());
    };
    SplitCertificate cert;
    cert.pivot = label(j, "pivot");
    cert.star_witness = label(j, "star_witness");
    if (j.contains("zigzag")) {
        if (!j["zigzag"].is_array())
            throw ParseError("certificate \"zigzag\" must be an array");
        for (const auto& m : j["zigzag"]) {
            ZigzagMove move;
            if (!m.is_object() || !m.contains("op") || !m["op"].is_string())
                throw ParseError("zig-zag move needs an \"op\"");
            const auto op = m["op"].get<std::string>();
            if (op == "remove")
                move.op = ZigzagMove::Op::Remove;
            else if (op == "add")
                move.op = ZigzagMove::Op::Add;
            else
                throw ParseError("unknown zig-zag op: " + op);
            move.vertex = label(m, "vertex");
            move.witness = label(m, "witness");
            cert.zigzag.push_back(std::move(move));
        }
    }
    return cert;
}

}  // namespace gridmatch
