#include "gridmatch/label.hpp"

#include <charconv>
#include <stdexcept>

namespace gridmatch {

namespace {

void require_positive(int value, const char* what)
{
    if (value <= 0)
        throw std::invalid_argument(std::string("vertex label index must be positive: ") + what);
}

std::string node_str(const GridNode& n)
{
    return "(" + std::to_string(n.row) + "," + std::to_string(n.col) + ")";
}

// Minimal cursor over a string_view for the structured label grammar.
class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    bool literal(std::string_view lit)
    {
        if (s_.substr(pos_, lit.size()) != lit)
            return false;
        pos_ += lit.size();
        return true;
    }

    bool number(int& out)
    {
        if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '9')
            return false;
        const char* begin = s_.data() + pos_;
        const char* end = s_.data() + s_.size();
        auto [ptr, ec] = std::from_chars(begin, end, out);
        if (ec != std::errc{} || out <= 0)
            return false;
        pos_ += static_cast<std::size_t>(ptr - begin);
        return true;
    }

    bool node(GridNode& out)
    {
        return literal("(") && number(out.row) && literal(",") && number(out.col) && literal(")");
    }

    bool done() const { return pos_ == s_.size(); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

VertexLabel VertexLabel::grid(int row, int col)
{
    require_positive(row, "grid row");
    require_positive(col, "grid column");
    return VertexLabel(GridNode{row, col});
}

VertexLabel VertexLabel::grid_edge(GridNode a, GridNode b)
{
    require_positive(a.row, "grid row");
    require_positive(a.col, "grid column");
    require_positive(b.row, "grid row");
    require_positive(b.col, "grid column");
    if (b < a)
        std::swap(a, b);
    return VertexLabel(GridEdge{a, b});
}

VertexLabel VertexLabel::e(int index)
{
    require_positive(index, "e index");
    return VertexLabel(SpineVertex{index});
}

VertexLabel VertexLabel::f(int row, int index)
{
    require_positive(row, "f row");
    require_positive(index, "f index");
    return VertexLabel(RowVertex{row, index});
}

VertexLabel VertexLabel::raw(std::string name)
{
    return VertexLabel(RawVertex{std::move(name)});
}

VertexLabel VertexLabel::parse(std::string_view text)
{
    {
        Cursor c(text);
        int i = 0;
        if (c.literal("e") && c.number(i) && c.done())
            return e(i);
    }
    {
        Cursor c(text);
        int k = 0, i = 0;
        if (c.literal("f") && c.number(k) && c.literal("_") && c.number(i) && c.done())
            return f(k, i);
    }
    {
        Cursor c(text);
        GridNode n;
        if (c.literal("g") && c.node(n) && c.done())
            return grid(n.row, n.col);
    }
    {
        Cursor c(text);
        GridNode a, b;
        if (c.literal("le(") && c.node(a) && c.literal(",") && c.node(b) && c.literal(")") && c.done())
            return grid_edge(a, b);
    }
    return raw(std::string(text));
}

std::string VertexLabel::str() const
{
    struct Printer {
        std::string operator()(const GridNode& n) const { return "g" + node_str(n); }
        std::string operator()(const GridEdge& e) const
        {
            return "le(" + node_str(e.first) + "," + node_str(e.second) + ")";
        }
        std::string operator()(const SpineVertex& v) const { return "e" + std::to_string(v.index); }
        std::string operator()(const RowVertex& v) const
        {
            return "f" + std::to_string(v.row) + "_" + std::to_string(v.index);
        }
        std::string operator()(const RawVertex& v) const { return v.name; }
    };
    return std::visit(Printer{}, value_);
}

std::string to_string(const VertexLabel& label)
{
    return label.str();
}

}  // namespace gridmatch
