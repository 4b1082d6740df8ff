// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gridmatch/complex.hpp"
#include "gridmatch/families.hpp"
#include "gridmatch/homology.hpp"
#include "gridmatch/integer_matrix.hpp"
#include "gridmatch/reduction.hpp"
#include "gridmatch/sphere.hpp"
#include "gridmatch/verify.hpp"
#include "support.hpp"

using namespace gridmatch;

namespace {

// Time bounds in seconds, one per criterion; zero means no bound.
constexpr double kBoundBaseCases = 10.0;
constexpr double kBoundSingleRow = 10.0;
constexpr double kBoundRecursion = 300.0;
constexpr double kBoundFolds = 120.0;
constexpr double kBoundSnf = 30.0;

constexpr int kFoldGraphs = 210;
constexpr int kFoldMaxVertices = 12;
constexpr int kSnfMatrices = 520;
constexpr int kSnfMaxDim = 6;
constexpr int kSnfBound = 9;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

std::vector<VerificationReport> verified;

std::string str(const BettiMap& b)
{
    return betti_to_json(b).dump();
}

bool run(int id, const char* title, double bound, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& ex) {
        o.fail(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (bound > 0 && secs > bound) {
        std::ostringstream why;
        why << "took " << secs << " s, bound " << bound << " s";
        o.fail(why.str());
    }
    std::printf("%s criterion %d [PRIMARY] %s (%.2f s%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
                bound > 0 ? (", bound " + std::to_string(static_cast<int>(bound)) + " s").c_str() : "",
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    return o.ok;
}

// Verify I(Delta^m_n) against a hand-written expectation as well as predict().
void check_instance(Outcome& o, int m, int n, bool reduce, const WedgeDescriptor& expected)
{
    VerificationReport r = verify_instance(m, n, reduce, Caps{});
    const std::string at = "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")";
    if (r.skipped) {
        o.fail(at + " skipped: " + r.skip_reason);
        return;
    }
    verified.push_back(r);
    if (r.computed.betti != descriptor_betti(expected))
        o.fail(at + " computed " + str(r.computed.betti) + ", expected " + expected.str());
    if (!r.computed.torsion_free())
        o.fail(at + " has torsion");
    if (!r.match)
        o.fail(at + " does not match predict()");
}

Outcome base_cases()
{
    Outcome o;
    for (int m = 2; m <= 4; ++m) {
        const WedgeDescriptor expected[4] = {
            WedgeDescriptor::point(),
            WedgeDescriptor::sphere(0),
            wedge({WedgeDescriptor::sphere(1), WedgeDescriptor::sphere(m - 1)}),
            WedgeDescriptor::sphere(m),
        };
        for (int n = 1; n <= 4; ++n)
            check_instance(o, m, n, false, expected[n - 1]);
    }
    return o;
}

Outcome single_row()
{
    Outcome o;
    for (int n = 1; n <= 10; ++n)
        check_instance(o, 1, n, false, n % 2 == 0 ? WedgeDescriptor::sphere(n / 2 - 1) : WedgeDescriptor::point());
    return o;
}

Outcome recursion()
{
    Outcome o;
    for (int n = 5; n <= 9; ++n)
        check_instance(o, 2, n, true, predict(2, n));
    for (int n = 5; n <= 7; ++n)
        check_instance(o, 3, n, true, predict(3, n));

    // Brute force on the matching complexes themselves, no folding.
    const std::pair<int, BettiMap> grids[] = {{5, {{2, 2}}}, {6, {{3, 5}}}};
    for (const auto& [n, expected] : grids) {
        HomologyResult h = reduced_homology(matching_complex(grid_graph(n, 2)));
        if (h.betti != expected || !h.torsion_free())
            o.fail("M(Gamma_" + std::to_string(n) + ") has homology " + to_json(h).dump());
    }
    return o;
}

Outcome matching_identity()
{
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
        Graph grid = grid_graph(n, 2);
        Graph lg = line_graph(grid);
        // Canonical bijection: edge {u, v} of the grid to the line-graph vertex for {u, v}.
        Relabeling map;
        for (const auto& [u, v] : grid.label_edges())
            map[edge_label(u, v)] = lg.label(lg.require(edge_label(v, u)));
        if (!equals_complex(matching_complex(grid), independence_complex(lg), map))
            o.fail("n=" + std::to_string(n) + ": complexes differ");
    }
    return o;
}

Outcome pipeline()
{
    Outcome o;
    for (int m = 2; m <= 3; ++m)
        for (int n = 5; n <= 7; ++n) {
            StepsReport r = run_steps(m, n, Caps{});
            if (const StepCheck* bad = r.first_failure())
                o.fail("(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ") " + bad->name + ": " +
                       bad->detail);
            bool saw_x = false, saw_y = false;
            for (const auto& c : r.checks) {
                saw_x |= c.name == "x-split-certificate" && c.passed;
                saw_y |= c.name == "y-split-certificate" && c.passed;
            }
            if (!saw_x || !saw_y)
                o.fail("split certificates not checked");
        }
    return o;
}

Outcome fold_invariance()
{
    Outcome o;
    std::mt19937_64 rng(testing::kSeed);
    std::uniform_int_distribution<int> size(1, kFoldMaxVertices);
    const double densities[] = {0.2, 0.4, 0.6};
    for (int i = 0; i < kFoldGraphs; ++i) {
        Graph g = testing::random_graph(rng, size(rng), densities[i % 3]);
        HomologyResult before = reduced_homology(independence_complex(g));
        ReductionTrace trace = fold_reduce(g);
        HomologyResult after = trace.contractible() ? HomologyResult{}
                                                    : reduced_homology(independence_complex(*trace.final));
        if (before != after)
            o.fail("graph " + std::to_string(i) + ": " + to_json(before).dump() + " vs " + to_json(after).dump());
    }
    return o;
}

Outcome snf_oracle()
{
    Outcome o;
    std::mt19937_64 rng(testing::kSeed + 7);
    for (int i = 0; i < kSnfMatrices; ++i) {
        auto m = testing::random_matrix(rng, kSnfMaxDim, kSnfBound);
        auto got = smith_normal_form(SparseIntMatrix::from_dense(m)).invariant_factors;
        if (got != testing::determinantal_factors(m))
            o.fail("matrix " + std::to_string(i) + " disagrees with the determinantal divisors");
    }
    return o;
}

Outcome euler()
{
    Outcome o;
    if (verified.empty())
        o.fail("no verified instances");
    for (const auto& r : verified) {
        const std::string at = "(m=" + std::to_string(r.m) + ", n=" + std::to_string(r.n) + ")";
        const auto predicted = descriptor_euler(predict(r.m, r.n));
        const auto full = reduced_euler_characteristic(independence_complex(delta_graph(r.m, r.n)));
        const auto betti = alternating_sum(r.computed.betti);
        if (predicted != full || full != betti || !r.euler_consistent())
            o.fail(at + " predicted " + std::to_string(predicted) + ", complex " + std::to_string(full) +
                   ", Betti sum " + std::to_string(betti));
    }
    return o;
}

Outcome torsion_fixture()
{
    Outcome o;
    HomologyResult h = reduced_homology(testing::projective_plane());
    const bool ok = h.betti.empty() && h.torsion.size() == 1 && h.torsion.count(1) &&
                    h.torsion.at(1) == std::vector<Integer>{Integer(2)};
    if (!ok)
        o.fail("got " + to_json(h).dump());
    return o;
}

}  // namespace

int main()
{
    bool all = true;
    all &= run(1, "base cases n=1..4, m=2..4", kBoundBaseCases, base_cases);
    all &= run(2, "single row m=1, n=1..10", kBoundSingleRow, single_row);
    all &= run(3, "recursion m=2 n=5..9, m=3 n=5..7 (folded) and M(Gamma_5), M(Gamma_6)", kBoundRecursion,
               recursion);
    all &= run(4, "M(Gamma_n) = I(L(Gamma_n)) for n=2..8", 0, matching_identity);
    all &= run(5, "step checks m=2..3, n=5..7", 0, pipeline);
    all &= run(6, "fold invariance on random graphs", kBoundFolds, fold_invariance);
    all &= run(7, "Smith normal form vs determinantal divisors", kBoundSnf, snf_oracle);
    all &= run(8, "Euler characteristic consistency", 0, euler);
    all &= run(9, "projective plane torsion", 0, torsion_fixture);
    return all ? 0 : 1;
}
