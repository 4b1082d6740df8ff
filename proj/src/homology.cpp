#include "gridmatch/homology.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "gridmatch/errors.hpp"

namespace gridmatch {

SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d)
{
    if (d < 0)
        throw std::invalid_argument("boundary dimension must be non-negative");
    SparseIntMatrix out(c.face_count(d - 1), c.face_count(d));
    std::vector<VertexIndex> sub;
    for (std::size_t j = 0; j < c.face_count(d); ++j) {
        const auto face = c.face(d, j);
        SparseIntMatrix::Column column;
        column.reserve(face.size());
        for (std::size_t p = 0; p < face.size(); ++p) {
            sub.assign(face.begin(), face.end());
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(p));
            auto row = c.find_face(d - 1, sub);
            if (!row)
                throw std::logic_error("complex is not closed under taking faces");
            column.push_back({*row, Integer(p % 2 == 0 ? 1 : -1)});
        }
        std::sort(column.begin(), column.end(),
                  [](const SparseIntMatrix::Entry& a, const SparseIntMatrix::Entry& b) { return a.row < b.row; });
        out.set_column(j, std::move(column));
    }
    return out;
}

HomologyResult reduced_homology(const SimplicialComplex& c, const HomologyOptions& options)
{
    HomologyResult result;
    if (c.is_void())
        return result;

    const int top = c.dimension();
    const int hi = options.max_dim ? std::min(top, *options.max_dim) : top;
    if (hi < -1)
        return result;

    // Boundary maps d = 0 .. hi + 1 (clipped to those with a nonzero domain).
    const int last = std::min(hi + 1, top);
    for (int d = 0; d <= last; ++d) {
        const std::size_t rows = c.face_count(d - 1), cols = c.face_count(d);
        if (rows > options.max_matrix || cols > options.max_matrix)
            throw ResourceLimitError("boundary matrix in dimension " + std::to_string(d) + " is " +
                                     std::to_string(rows) + "x" + std::to_string(cols) +
                                     ", above the cap of " + std::to_string(options.max_matrix));
    }

    std::vector<SnfResult> snf(static_cast<std::size_t>(std::max(last + 1, 0)));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int d = next++; d <= last; d = next++)
            snf[static_cast<std::size_t>(d)] = smith_normal_form(boundary_matrix(c, d));
    };
    const unsigned threads = std::clamp<unsigned>(options.threads, 1u, static_cast<unsigned>(last + 1 > 0 ? last + 1 : 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    auto rank = [&](int d) -> std::int64_t {
        if (d < 0 || d > last)
            return 0;
        return static_cast<std::int64_t>(snf[static_cast<std::size_t>(d)].rank());
    };
    for (int d = -1; d <= hi; ++d) {
        const std::int64_t b = static_cast<std::int64_t>(c.face_count(d)) - rank(d) - rank(d + 1);
        if (b != 0)
            result.betti[d] = b;
        if (d + 1 <= last) {
            auto torsion = snf[static_cast<std::size_t>(d + 1)].torsion();
            if (!torsion.empty())
                result.torsion[d] = std::move(torsion);
        }
    }
    return result;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& c)
{
    std::int64_t chi = 0;
    for (int d = -1; d <= c.dimension(); ++d) {
        const auto count = static_cast<std::int64_t>(c.face_count(d));
        chi += (d % 2 == 0) ? count : -count;
    }
    return chi;
}

std::int64_t alternating_sum(const BettiMap& betti)
{
    std::int64_t sum = 0;
    for (const auto& [d, b] : betti)
        sum += (d % 2 == 0) ? b : -b;
    return sum;
}

BettiMap shift(const BettiMap& betti, int by)
{
    BettiMap out;
    for (const auto& [d, b] : betti)
        out[d + by] = b;
    return out;
}

BettiMap add(const BettiMap& a, const BettiMap& b)
{
    BettiMap out = a;
    for (const auto& [d, v] : b)
        out[d] += v;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

nlohmann::ordered_json betti_to_json(const BettiMap& betti)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    for (const auto& [d, b] : betti)
        out[std::to_string(d)] = b;
    return out;
}

nlohmann::ordered_json to_json(const HomologyResult& h)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::object();
    if (!h.betti.empty())
        out["betti"] = betti_to_json(h.betti);
    if (!h.torsion.empty()) {
        nlohmann::ordered_json torsion = nlohmann::ordered_json::object();
        for (const auto& [d, factors] : h.torsion) {
            nlohmann::ordered_json list = nlohmann::ordered_json::array();
            for (const auto& f : factors) {
                if (f.fits_slong_p())
                    list.push_back(f.get_si());
                else
                    list.push_back(f.get_str());
            }
            torsion[std::to_string(d)] = std::move(list);
        }
        out["torsion"] = std::move(torsion);
    }
    return out;
}

}  // namespace gridmatch
