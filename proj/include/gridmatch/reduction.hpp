#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gridmatch/graph.hpp"
#include "gridmatch/graph_io.hpp"

namespace gridmatch {

/// Removal of `removed` justified by N(witness) being a subset of N(removed).
struct FoldStep {
    VertexLabel removed;
    VertexLabel witness;
    bool operator==(const FoldStep&) const = default;
};

/// Terminal step: the remaining graph is edgeless and nonempty, so its
/// independence complex is a full simplex.
struct IsolatedVertexHalt {
    VertexLabel vertex;
    bool operator==(const IsolatedVertexHalt&) const = default;
};

using TraceStep = std::variant<FoldStep, IsolatedVertexHalt>;

struct ReductionTrace {
    Graph initial;
    std::vector<TraceStep> steps;
    /// Absent when the trace ends in IsolatedVertexHalt (contractible).
    std::optional<Graph> final;

    bool contractible() const { return !final.has_value(); }
};

/// True when removing `step.removed` is a valid domination fold in g.
bool is_valid_fold(const Graph& g, const FoldStep& step);

/// First dominated pair (witness v, removed w), v != w, N(v) subset of N(w),
/// scanning witnesses and then removed vertices in canonical order.
std::optional<FoldStep> find_fold(const Graph& g);

/// Greedy folding until no fold applies or the graph becomes edgeless and
/// nonempty (the contractible halt).
ReductionTrace fold_reduce(const Graph& g);

/// Re-applies the steps of a trace from its initial graph; throws
/// std::logic_error if a step is not valid where it is applied.
std::optional<Graph> replay(const ReductionTrace& trace);

/// One move of a zig-zag between induced subgraphs of G \ v.
struct ZigzagMove {
    enum class Op { Remove, Add };
    Op op = Op::Remove;
    VertexLabel vertex;
    VertexLabel witness;
    bool operator==(const ZigzagMove&) const = default;
};

/// Witness that the link inclusion I(G \ N[v]) -> I(G \ v) is null-homotopic:
/// a chain of domination folds (either direction) from G \ N[v] to some F,
/// with I(F) inside the star of `star_witness` in I(G \ v).
struct SplitCertificate {
    VertexLabel pivot;
    std::vector<ZigzagMove> zigzag;
    VertexLabel star_witness;
    bool operator==(const SplitCertificate&) const = default;
};

class CertificateError : public std::runtime_error {
public:
    enum class Kind { PivotMissing, ZigzagMoveInvalid, StarConditionFailed };

    CertificateError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// I(g) ~ I(deleted) v Sigma I(link) once a certificate checks out.
struct VerifiedSplit {
    Graph deleted;  // g \ v
    Graph link;     // g \ N[v]
    Graph final;    // the graph F reached by the zig-zag
};

/// Validates every move and the star condition; throws CertificateError.
VerifiedSplit check_split(const Graph& g, const SplitCertificate& cert);

Json certificate_to_json(const SplitCertificate& cert);
/// Throws ParseError.
SplitCertificate certificate_from_json(const Json& j);

/// Certificate for splitting X_n at e_{n-2} (m >= 2, n >= 4).
SplitCertificate x_split_certificate(int m, int n);
/// Certificate for splitting Y_n at e_n (m >= 2, n >= 5).
SplitCertificate y_split_certificate(int m, int n);

}  // namespace gridmatch
