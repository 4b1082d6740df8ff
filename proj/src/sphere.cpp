#include "gridmatch/sphere.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace gridmatch {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("sphere multiplicity overflows 64 bits");
    return out;
}

class PredictionCache {
public:
    WedgeDescriptor get(int m, int n)
    {
        std::lock_guard lock(mutex_);
        auto& row = table_[m];
        // Bottom-up fill; each entry depends only on smaller n.
        for (int k = static_cast<int>(row.size()) + 1; k <= n; ++k)
            row.push_back(compute(m, k, row));
        return row[static_cast<std::size_t>(n - 1)];
    }

private:
    static WedgeDescriptor compute(int m, int n, const std::vector<WedgeDescriptor>& known)
    {
        auto at = [&](int k) -> const WedgeDescriptor& { return known[static_cast<std::size_t>(k - 1)]; };
        if (m == 1)
            return n % 2 == 0 ? WedgeDescriptor::sphere(n / 2 - 1) : WedgeDescriptor::point();
        switch (n) {
        case 1: return WedgeDescriptor::point();
        case 2: return WedgeDescriptor::sphere(0);
        case 3: return wedge({WedgeDescriptor::sphere(1), WedgeDescriptor::sphere(m - 1)});
        case 4: return WedgeDescriptor::sphere(m);
        default:
            return wedge({suspend(at(n - 3), 2), suspend(at(n - 3), m), suspend(at(n - 4), m + 1)});
        }
    }

    std::mutex mutex_;
    std::map<int, std::vector<WedgeDescriptor>> table_;
};

PredictionCache& cache()
{
    static PredictionCache instance;
    return instance;
}

}  // namespace

WedgeDescriptor WedgeDescriptor::sphere(int dim, std::uint64_t count)
{
    if (dim < -1)
        throw std::invalid_argument("sphere dimension must be at least -1");
    WedgeDescriptor out;
    if (count > 0)
        out.spheres_[dim] = count;
    return out;
}

WedgeDescriptor WedgeDescriptor::from_counts(const std::map<int, std::uint64_t>& counts)
{
    WedgeDescriptor out;
    for (const auto& [dim, count] : counts) {
        if (dim < -1)
            throw std::invalid_argument("sphere dimension must be at least -1");
        if (count > 0)
            out.spheres_[dim] = count;
    }
    return out;
}

std::uint64_t WedgeDescriptor::sphere_count() const
{
    std::uint64_t total = 0;
    for (const auto& [dim, count] : spheres_)
        total = checked_add(total, count);
    return total;
}

std::string WedgeDescriptor::str() const
{
    if (contractible())
        return "point";
    std::string out;
    for (const auto& [dim, count] : spheres_) {
        for (std::uint64_t i = 0; i < count; ++i) {
            if (!out.empty())
                out += " ∨ ";
            out += "S^" + std::to_string(dim);
        }
    }
    return out;
}

nlohmann::ordered_json WedgeDescriptor::to_json() const
{
    nlohmann::ordered_json out;
    if (contractible()) {
        out["contractible"] = true;
        return out;
    }
    nlohmann::ordered_json spheres = nlohmann::ordered_json::object();
    for (const auto& [dim, count] : spheres_)
        spheres[std::to_string(dim)] = count;
    out["spheres"] = std::move(spheres);
    return out;
}

WedgeDescriptor suspend(const WedgeDescriptor& d, int times)
{
    if (times < 0)
        throw std::invalid_argument("suspension count must be non-negative");
    std::map<int, std::uint64_t> shifted;
    for (const auto& [dim, count] : d.spheres())
        shifted[dim + times] = count;
    return WedgeDescriptor::from_counts(shifted);
}

WedgeDescriptor wedge(std::span<const WedgeDescriptor> parts)
{
    std::map<int, std::uint64_t> counts;
    for (const auto& part : parts)
        for (const auto& [dim, count] : part.spheres())
            counts[dim] = checked_add(counts[dim], count);
    return WedgeDescriptor::from_counts(counts);
}

WedgeDescriptor wedge(std::initializer_list<WedgeDescriptor> parts)
{
    return wedge(std::span<const WedgeDescriptor>(parts.begin(), parts.size()));
}

WedgeDescriptor predict(int m, int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("predict needs m >= 1 and n >= 1");
    return cache().get(m, n);
}

BettiMap descriptor_betti(const WedgeDescriptor& d)
{
    BettiMap out;
    for (const auto& [dim, count] : d.spheres())
        out[dim] = static_cast<std::int64_t>(count);
    return out;
}

std::int64_t descriptor_euler(const WedgeDescriptor& d)
{
    std::int64_t chi = 0;
    for (const auto& [dim, count] : d.spheres()) {
        const auto c = static_cast<std::int64_t>(count);
        chi += (dim % 2 == 0) ? c : -c;
    }
    return chi;
}

}  // namespace gridmatch
