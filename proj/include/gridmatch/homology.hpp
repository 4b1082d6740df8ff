#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"

#include "gridmatch/complex.hpp"
#include "gridmatch/integer_matrix.hpp"

namespace gridmatch {

using BettiMap = std::map<int, std::int64_t>;

/// Reduced integral homology: free ranks and torsion coefficients per
/// dimension.  Dimensions with rank zero or no torsion are absent.
struct HomologyResult {
    BettiMap betti;
    std::map<int, std::vector<Integer>> torsion;

    bool torsion_free() const { return torsion.empty(); }
    bool acyclic() const { return betti.empty() && torsion.empty(); }

    bool operator==(const HomologyResult&) const = default;
};

struct HomologyOptions {
    /// Highest homology dimension to report; everything when absent.
    std::optional<int> max_dim;
    /// Boundary matrices with more rows or columns than this are refused.
    std::size_t max_matrix = 20'000;
    /// Boundary matrices of different dimensions are reduced on up to this many threads.
    unsigned threads = 1;
};

/// Boundary map from d-faces to (d-1)-faces in the augmented chain complex.
/// Column j is face j of dimension d; removing the vertex at position p
/// contributes (-1)^p.  For d = 0 the target is the empty face.
SparseIntMatrix boundary_matrix(const SimplicialComplex& c, int d);

/// Reduced homology via Smith normal form of every boundary map.
/// Throws ResourceLimitError when a boundary matrix exceeds the cap.
HomologyResult reduced_homology(const SimplicialComplex& c, const HomologyOptions& options = {});

/// Sum over d >= -1 of (-1)^d times the number of d-faces.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& c);

/// Sum over d of (-1)^d times the reduced Betti number.
std::int64_t alternating_sum(const BettiMap& betti);

/// Shift every dimension by `by` (homology of a `by`-fold suspension).
BettiMap shift(const BettiMap& betti, int by);
/// Pointwise sum (homology of a wedge).
BettiMap add(const BettiMap& a, const BettiMap& b);

nlohmann::ordered_json betti_to_json(const BettiMap& betti);
/// {"betti": {"-1": b, "0": b, ...}, "torsion": {"1": [2, 2], ...}}, zero entries omitted.
nlohmann::ordered_json to_json(const HomologyResult& h);

}  // namespace gridmatch
