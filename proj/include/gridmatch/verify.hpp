#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gridmatch/graph.hpp"
#include "gridmatch/homology.hpp"
#include "gridmatch/sphere.hpp"

namespace gridmatch {

struct Caps {
    std::size_t max_faces = 10'000'000;
    std::size_t max_matrix = 20'000;
};

enum class ComplexKind { Independence, Matching };

struct ReductionStats {
    std::size_t vertices_before = 0;
    std::size_t vertices_after = 0;
    std::size_t faces_enumerated = 0;
};

/// Homology of I(g) or M(g), optionally after fold_reduce.
struct GraphHomology {
    HomologyResult homology;
    ReductionStats stats;
    /// The fold reduction ended in the contractible halt; no complex was built.
    bool contractible_halt = false;
    /// Reduced Euler characteristic of the complex actually built (0 on the halt).
    std::int64_t complex_euler = 0;
};

/// Throws ResourceLimitError if a cap is exceeded.
GraphHomology compute_graph_homology(const Graph& g, ComplexKind kind, bool reduce,
                                     std::optional<int> max_dim, const Caps& caps,
                                     unsigned threads = 1);

nlohmann::ordered_json to_json(const ReductionStats& stats);

struct VerificationReport {
    int m = 0;
    int n = 0;
    bool reduce = false;
    WedgeDescriptor predicted;
    HomologyResult computed;
    bool skipped = false;
    std::string skip_reason;
    bool torsion_free = false;
    bool match = false;
    std::int64_t euler_predicted = 0;
    std::int64_t euler_complex = 0;
    std::int64_t euler_betti = 0;
    ReductionStats stats;
    double wall_time_ms = 0.0;

    bool euler_consistent() const
    {
        return euler_predicted == euler_complex && euler_complex == euler_betti;
    }
    bool passed() const { return !skipped && match && torsion_free && euler_consistent(); }
};

/// Computes I(Delta^m_n) homology and compares it with predict(m, n).
/// Instances over a cap come back with skipped = true.
VerificationReport verify_instance(int m, int n, bool reduce, const Caps& caps, unsigned threads = 1);

/// Deterministic fields first; wall time isolated under "timing".
nlohmann::ordered_json to_json(const VerificationReport& report, bool include_timing = true);

struct SuiteSummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

/// One report per (m, n), sorted by (m, n); rows run on up to `workers` threads.
std::vector<VerificationReport> run_suite(const std::vector<int>& m_values, const std::vector<int>& n_values,
                                          bool reduce, const Caps& caps, unsigned workers);
SuiteSummary summarize(const std::vector<VerificationReport>& reports);
std::string suite_csv(const std::vector<VerificationReport>& reports);

struct StepCheck {
    std::string name;
    std::string claim;
    bool passed = false;
    std::string detail;
};

struct StepsReport {
    int m = 0;
    int n = 0;
    std::vector<StepCheck> checks;

    bool all_passed() const;
    /// First failing check, if any.
    const StepCheck* first_failure() const;
};

/// Walks Delta -> X -> Y -> Z, Z', Z'', W for m >= 2, n >= 5 and checks each
/// claimed equivalence at the level of homology, including both split
/// certificates.  Throws std::invalid_argument for out-of-range (m, n) and
/// ResourceLimitError past the caps.
StepsReport run_steps(int m, int n, const Caps& caps);

nlohmann::ordered_json to_json(const StepsReport& report);

}  // namespace gridmatch
