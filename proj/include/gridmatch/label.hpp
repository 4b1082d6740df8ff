#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace gridmatch {

/// Lattice point (i, j) of a grid graph, 1-based.
struct GridNode {
    int row = 1;
    int col = 1;
    auto operator<=>(const GridNode&) const = default;
};

/// An edge of a grid graph, used as a vertex of its line graph.
/// Endpoints are kept in sorted order.
struct GridEdge {
    GridNode first;
    GridNode second;
    auto operator<=>(const GridEdge&) const = default;
};

/// Spine vertex e_i of the Delta family.
struct SpineVertex {
    int index = 1;
    auto operator<=>(const SpineVertex&) const = default;
};

/// Row vertex f^k_i of the Delta family (row k, position i).
struct RowVertex {
    int row = 1;
    int index = 1;
    auto operator<=>(const RowVertex&) const = default;
};

/// Free-form vertex name for graphs read from files.
struct RawVertex {
    std::string name;
    auto operator<=>(const RawVertex&) const = default;
};

/// Structured vertex label.  The total order compares the variant tag first
/// (grid node < grid edge < e < f < raw) and then the fields lexicographically.
class VertexLabel {
public:
    using Value = std::variant<GridNode, GridEdge, SpineVertex, RowVertex, RawVertex>;

    VertexLabel() : value_(RawVertex{}) {}

    static VertexLabel grid(int row, int col);
    static VertexLabel grid_edge(GridNode a, GridNode b);
    static VertexLabel e(int index);
    static VertexLabel f(int row, int index);
    static VertexLabel raw(std::string name);

    /// Parses the textual form produced by str().  Strings that do not match a
    /// structured form ("e3", "f2_4", "g(1,2)", "le((1,1),(2,1))") become raw.
    static VertexLabel parse(std::string_view text);

    const Value& value() const { return value_; }
    std::string str() const;

    template <class T>
    bool is() const { return std::holds_alternative<T>(value_); }

    auto operator<=>(const VertexLabel&) const = default;
    bool operator==(const VertexLabel&) const = default;

private:
    explicit VertexLabel(Value v) : value_(std::move(v)) {}
    Value value_;
};

std::string to_string(const VertexLabel& label);

}  // namespace gridmatch
