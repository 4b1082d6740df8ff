#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>

#include "json.hpp"

#include "gridmatch/homology.hpp"

namespace gridmatch {

/// Homotopy type of a finite wedge of spheres, or of a point.
///
/// S^{-1} denotes the empty complex, so that suspending it gives S^0.
/// Stored as (dimension -> multiplicity) with no zero multiplicities.
class WedgeDescriptor {
public:
    /// Contractible.
    WedgeDescriptor() = default;

    static WedgeDescriptor point() { return {}; }
    static WedgeDescriptor sphere(int dim, std::uint64_t count = 1);
    /// Contractible when every count is zero.
    static WedgeDescriptor from_counts(const std::map<int, std::uint64_t>& counts);

    bool contractible() const { return spheres_.empty(); }
    const std::map<int, std::uint64_t>& spheres() const { return spheres_; }
    std::uint64_t sphere_count() const;

    /// "point" or "S^a ∨ S^a ∨ S^b", dimensions ascending.
    std::string str() const;
    /// {"contractible": true} or {"spheres": {"2": 2}}.
    nlohmann::ordered_json to_json() const;

    bool operator==(const WedgeDescriptor&) const = default;

private:
    std::map<int, std::uint64_t> spheres_;
};

WedgeDescriptor suspend(const WedgeDescriptor& d, int times = 1);
WedgeDescriptor wedge(std::span<const WedgeDescriptor> parts);
WedgeDescriptor wedge(std::initializer_list<WedgeDescriptor> parts);

/// Homotopy type of I(Delta^m_n):
///   m = 1:  S^{n/2 - 1} for even n, a point for odd n;
///   m >= 2, n <= 4:  point, S^0, S^1 v S^{m-1}, S^m;
///   m >= 2, n >= 5:  S^2 I(n-3) v S^m I(n-3) v S^{m+1} I(n-4).
/// Memoized and safe to call concurrently.  Throws std::invalid_argument for
/// m < 1 or n < 1, std::overflow_error if a multiplicity leaves 64 bits.
WedgeDescriptor predict(int m, int n);

/// Reduced Betti numbers of the wedge.
BettiMap descriptor_betti(const WedgeDescriptor& d);
/// Reduced Euler characteristic of the wedge.
std::int64_t descriptor_euler(const WedgeDescriptor& d);

}  // namespace gridmatch
