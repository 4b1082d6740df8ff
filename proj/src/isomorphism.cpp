#include "gridmatch/isomorphism.hpp"

#include <algorithm>
#include <limits>

namespace gridmatch {

namespace {

using Coloring = std::vector<std::size_t>;

// Joint 1-dimensional Weisfeiler-Leman refinement over the disjoint union
// a + b, so that color ids are comparable across the two graphs.
std::pair<Coloring, Coloring> refine_colors(const Graph& a, const Graph& b)
{
    const std::size_t na = a.vertex_count();
    const std::size_t total = na + b.vertex_count();
    auto nbrs = [&](std::size_t v) -> const std::vector<std::size_t>& {
        return v < na ? a.neighbors(v) : b.neighbors(v - na);
    };
    auto offset = [&](std::size_t v) { return v < na ? std::size_t{0} : na; };

    Coloring color(total);
    for (std::size_t v = 0; v < total; ++v)
        color[v] = nbrs(v).size();

    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> signatures(total);
        for (std::size_t v = 0; v < total; ++v) {
            auto& sig = signatures[v].first;
            sig.push_back(color[v]);
            std::vector<std::size_t> around;
            for (std::size_t w : nbrs(v))
                around.push_back(color[w + offset(v)]);
            std::sort(around.begin(), around.end());
            sig.insert(sig.end(), around.begin(), around.end());
            signatures[v].second = v;
        }
        std::vector<std::size_t> order(total);
        for (std::size_t v = 0; v < total; ++v)
            order[v] = v;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return signatures[x].first < signatures[y].first;
        });
        Coloring next(total);
        std::size_t id = 0;
        for (std::size_t i = 0; i < total; ++i) {
            if (i > 0 && signatures[order[i]].first != signatures[order[i - 1]].first)
                ++id;
            next[order[i]] = id;
        }
        const std::size_t next_classes = total == 0 ? 0 : id + 1;
        color = std::move(next);
        if (next_classes == classes)
            break;
        classes = next_classes;
    }
    Coloring ca(color.begin(), color.begin() + static_cast<std::ptrdiff_t>(na));
    Coloring cb(color.begin() + static_cast<std::ptrdiff_t>(na), color.end());
    return {std::move(ca), std::move(cb)};
}

class Matcher {
public:
    Matcher(const Graph& a, const Graph& b, Coloring ca, Coloring cb)
        : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
          map_(a.vertex_count(), kUnset), used_(b.vertex_count(), false)
    {
        build_order();
    }

    bool run() { return extend(0); }

    VertexMap result() const
    {
        VertexMap out;
        for (std::size_t v = 0; v < map_.size(); ++v)
            out.emplace(a_.label(v), b_.label(map_[v]));
        return out;
    }

private:
    static constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

    // Visit vertices so that each one has as many already-placed neighbors as
    // possible; small color classes first break ties.
    void build_order()
    {
        const std::size_t n = a_.vertex_count();
        std::vector<std::size_t> class_size(n + b_.vertex_count() + 1, 0);
        for (std::size_t c : ca_)
            ++class_size[c];
        std::vector<bool> placed(n, false);
        std::vector<std::size_t> placed_nbrs(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            std::size_t best = kUnset;
            for (std::size_t v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best == kUnset || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] &&
                     class_size[ca_[v]] < class_size[ca_[best]]))
                    best = v;
            }
            placed[best] = true;
            order_.push_back(best);
            for (std::size_t w : a_.neighbors(best))
                ++placed_nbrs[w];
        }
    }

    bool consistent(std::size_t v, std::size_t candidate, std::size_t depth) const
    {
        for (std::size_t i = 0; i < depth; ++i) {
            std::size_t x = order_[i];
            if (a_.adjacent(v, x) != b_.adjacent(candidate, map_[x]))
                return false;
        }
        return true;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const std::size_t v = order_[depth];
        for (std::size_t c = 0; c < b_.vertex_count(); ++c) {
            if (used_[c] || cb_[c] != ca_[v] || !consistent(v, c, depth))
                continue;
            map_[v] = c;
            used_[c] = true;
            if (extend(depth + 1))
                return true;
            used_[c] = false;
            map_[v] = kUnset;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    Coloring ca_, cb_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> map_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;

    auto [ca, cb] = refine_colors(a, b);
    auto hist_a = ca, hist_b = cb;
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    if (hist_a != hist_b)
        return std::nullopt;

    Matcher matcher(a, b, std::move(ca), std::move(cb));
    if (!matcher.run())
        return std::nullopt;
    return matcher.result();
}

bool is_isomorphism(const Graph& a, const Graph& b, const VertexMap& map)
{
    if (a.vertex_count() != b.vertex_count() || map.size() != a.vertex_count())
        return false;
    std::vector<std::size_t> image(a.vertex_count());
    std::vector<bool> hit(b.vertex_count(), false);
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
        auto it = map.find(a.label(v));
        if (it == map.end())
            return false;
        auto w = b.index_of(it->second);
        if (!w || hit[*w])
            return false;
        hit[*w] = true;
        image[v] = *w;
    }
    for (std::size_t u = 0; u < a.vertex_count(); ++u)
        for (std::size_t v = u + 1; v < a.vertex_count(); ++v)
            if (a.adjacent(u, v) != b.adjacent(image[u], image[v]))
                return false;
    return true;
}

}  // namespace gridmatch
