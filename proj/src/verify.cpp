#include "gridmatch/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gridmatch/complex.hpp"
#include "gridmatch/errors.hpp"
#include "gridmatch/families.hpp"
#include "gridmatch/reduction.hpp"

namespace gridmatch {

GraphHomology compute_graph_homology(const Graph& g, ComplexKind kind, bool reduce,
                                     std::optional<int> max_dim, const Caps& caps, unsigned threads)
{
    GraphHomology out;
    const ComplexLimits limits{caps.max_faces};
    HomologyOptions options;
    options.max_dim = max_dim;
    options.max_matrix = caps.max_matrix;
    options.threads = threads;

    SimplicialComplex complex;
    if (!reduce) {
        if (kind == ComplexKind::Matching) {
            out.stats.vertices_before = g.edge_count();
            complex = matching_complex(g, limits);
        } else {
            out.stats.vertices_before = g.vertex_count();
            complex = independence_complex(g, limits);
        }
        out.stats.vertices_after = out.stats.vertices_before;
    } else {
        // M(G) = I(L(G)), so the matching case folds the line graph.
        const Graph base = kind == ComplexKind::Matching ? line_graph(g) : g;
        out.stats.vertices_before = base.vertex_count();
        ReductionTrace trace = fold_reduce(base);
        if (trace.contractible()) {
            const auto folds = static_cast<std::size_t>(std::count_if(
                trace.steps.begin(), trace.steps.end(),
                [](const TraceStep& s) { return std::holds_alternative<FoldStep>(s); }));
            out.stats.vertices_after = base.vertex_count() - folds;
            out.contractible_halt = true;
            return out;
        }
        out.stats.vertices_after = trace.final->vertex_count();
        complex = independence_complex(*trace.final, limits);
    }
    out.stats.faces_enumerated = complex.total_faces();
    out.homology = reduced_homology(complex, options);
    out.complex_euler = reduced_euler_characteristic(complex);
    return out;
}

nlohmann::ordered_json to_json(const ReductionStats& stats)
{
    nlohmann::ordered_json out;
    out["vertices_before"] = stats.vertices_before;
    out["vertices_after"] = stats.vertices_after;
    out["faces_enumerated"] = stats.faces_enumerated;
    return out;
}

VerificationReport verify_instance(int m, int n, bool reduce, const Caps& caps, unsigned threads)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.m = m;
    report.n = n;
    report.reduce = reduce;
    report.predicted = predict(m, n);
    report.euler_predicted = descriptor_euler(report.predicted);
    try {
        GraphHomology run = compute_graph_homology(delta_graph(m, n), ComplexKind::Independence, reduce,
                                                   std::nullopt, caps, threads);
        report.computed = std::move(run.homology);
        report.stats = run.stats;
        report.euler_complex = run.complex_euler;
        report.euler_betti = alternating_sum(report.computed.betti);
        report.torsion_free = report.computed.torsion_free();
        report.match = report.torsion_free && descriptor_betti(report.predicted) == report.computed.betti;
    } catch (const ResourceLimitError& ex) {
        report.skipped = true;
        report.skip_reason = ex.what();
    }
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing)
{
    nlohmann::ordered_json out;
    out["m"] = r.m;
    out["n"] = r.n;
    out["reduce"] = r.reduce;
    out["status"] = r.skipped ? "skipped" : "checked";
    nlohmann::ordered_json predicted;
    predicted["text"] = r.predicted.str();
    predicted["descriptor"] = r.predicted.to_json();
    out["predicted"] = std::move(predicted);
    if (r.skipped) {
        out["skip_reason"] = r.skip_reason;
    } else {
        out["computed"] = to_json(r.computed);
        out["torsion_free"] = r.torsion_free;
        out["match"] = r.match;
        nlohmann::ordered_json euler;
        euler["predicted"] = r.euler_predicted;
        euler["complex"] = r.euler_complex;
        euler["betti"] = r.euler_betti;
        euler["consistent"] = r.euler_consistent();
        out["euler"] = std::move(euler);
        out["reduction_stats"] = to_json(r.stats);
    }
    if (include_timing)
        out["timing"] = {{"wall_time_ms", r.wall_time_ms}};
    return out;
}

std::vector<VerificationReport> run_suite(const std::vector<int>& m_values, const std::vector<int>& n_values,
                                          bool reduce, const Caps& caps, unsigned workers)
{
    std::vector<int> ms = m_values, ns = n_values;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    std::vector<std::pair<int, int>> jobs;
    for (int m : ms)
        for (int n : ns)
            jobs.emplace_back(m, n);

    std::vector<VerificationReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            reports[i] = verify_instance(jobs[i].first, jobs[i].second, reduce, caps);
    };
    const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return reports;
}

SuiteSummary summarize(const std::vector<VerificationReport>& reports)
{
    SuiteSummary s;
    for (const auto& r : reports) {
        if (r.skipped)
            ++s.skipped;
        else if (r.passed())
            ++s.passed;
        else
            ++s.failed;
    }
    return s;
}

std::string suite_csv(const std::vector<VerificationReport>& reports)
{
    std::ostringstream out;
    out << "m,n,status,predicted,betti,torsion_free,match,euler_predicted,euler_complex,"
           "vertices_before,vertices_after,faces_enumerated,wall_time_ms\n";
    for (const auto& r : reports) {
        std::string betti;
        for (const auto& [d, b] : r.computed.betti)
            betti += (betti.empty() ? "" : ";") + std::to_string(d) + ":" + std::to_string(b);
        out << r.m << ',' << r.n << ',' << (r.skipped ? "skipped" : "checked") << ",\""
            << r.predicted.str() << "\"," << betti << ',' << (r.torsion_free ? "true" : "false") << ','
            << (r.match ? "true" : "false") << ',' << r.euler_predicted << ',' << r.euler_complex << ','
            << r.stats.vertices_before << ',' << r.stats.vertices_after << ',' << r.stats.faces_enumerated
            << ',' << r.wall_time_ms << '\n';
    }
    return out.str();
}

bool StepsReport::all_passed() const
{
    return first_failure() == nullptr;
}

const StepCheck* StepsReport::first_failure() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return &c;
    return nullptr;
}

namespace {

std::string betti_text(const HomologyResult& h)
{
    std::string out = to_json(h).dump();
    return out;
}

class StepRunner {
public:
    StepRunner(const Caps& caps, StepsReport& report) : caps_(caps), report_(report) {}

    HomologyResult homology(const Graph& g)
    {
        HomologyOptions options;
        options.max_matrix = caps_.max_matrix;
        HomologyResult h = reduced_homology(independence_complex(g, {caps_.max_faces}), options);
        torsion_free_ = torsion_free_ && h.torsion_free();
        return h;
    }

    void check(std::string name, std::string claim, bool ok, std::string detail = {})
    {
        report_.checks.push_back({std::move(name), std::move(claim), ok, std::move(detail)});
    }

    void check_betti(std::string name, std::string claim, const BettiMap& lhs, const BettiMap& rhs)
    {
        const bool ok = lhs == rhs;
        std::string detail = betti_to_json(lhs).dump() + (ok ? " == " : " != ") + betti_to_json(rhs).dump();
        check(std::move(name), std::move(claim), ok, std::move(detail));
    }

    // Runs a certificate check and records the outcome; nullopt on rejection.
    std::optional<VerifiedSplit> split(std::string name, std::string claim, const Graph& g,
                                       const SplitCertificate& cert)
    {
        try {
            VerifiedSplit s = check_split(g, cert);
            check(std::move(name), std::move(claim), true, "certificate accepted");
            return s;
        } catch (const CertificateError& ex) {
            check(std::move(name), std::move(claim), false, ex.what());
            return std::nullopt;
        }
    }

    bool torsion_free() const { return torsion_free_; }

private:
    const Caps& caps_;
    StepsReport& report_;
    bool torsion_free_ = true;
};

}  // namespace

StepsReport run_steps(int m, int n, const Caps& caps)
{
    if (m < 2 || n < 5)
        throw std::invalid_argument("steps needs m >= 2 and n >= 5");

    StepsReport report;
    report.m = m;
    report.n = n;
    StepRunner run(caps, report);

    const Graph delta = delta_graph(m, n);
    const Graph x = named_subgraph(NamedSubgraphKind::X, m, n);
    const Graph y = named_subgraph(NamedSubgraphKind::Y, m, n);
    const Graph z = named_subgraph(NamedSubgraphKind::Z, m, n);
    const Graph zp = named_subgraph(NamedSubgraphKind::Zprime, m, n);
    const Graph zpp = named_subgraph(NamedSubgraphKind::Zdoubleprime, m, n);
    const Graph w = named_subgraph(NamedSubgraphKind::W, m, n);

    const BettiMap d3 = run.homology(delta_graph(m, n - 3)).betti;
    const BettiMap d4 = run.homology(delta_graph(m, n - 4)).betti;
    const HomologyResult h_delta = run.homology(delta);
    const HomologyResult h_x = run.homology(x);
    const HomologyResult h_y = run.homology(y);

    // Delta -> X: e_n dominates e_{n-1}.
    run.check("delta-fold", "N(e_n) is contained in N(e_{n-1}) in Delta",
              is_valid_fold(delta, FoldStep{VertexLabel::e(n - 1), VertexLabel::e(n)}));
    run.check_betti("delta-equals-x", "I(Delta^m_n) ≃ I(X_n)", h_delta.betti, h_x.betti);

    // X_n splits at e_{n-2}.
    if (auto s = run.split("x-split-certificate", "I(X_n \\ N[e_{n-2}]) -> I(Y_n) is null-homotopic", x,
                           x_split_certificate(m, n))) {
        run.check("x-split-deleted", "X_n \\ e_{n-2} = Y_n", s->deleted == y);
        const BettiMap link = run.homology(s->link).betti;
        run.check_betti("x-split-link", "I(X_n \\ N[e_{n-2}]) ≃ Σ I(Delta^m_{n-3})", link, shift(d3, 1));
        run.check_betti("x-split-wedge", "I(X_n) ≃ I(Y_n) ∨ Σ I(X_n \\ N[e_{n-2}])", h_x.betti,
                        add(h_y.betti, shift(link, 1)));
    }
    run.check_betti("x-decomposition", "I(X_n) ≃ I(Y_n) ∨ Σ^2 I(Delta^m_{n-3})", h_x.betti,
                    add(h_y.betti, shift(d3, 2)));

    // Y_n splits at e_n.
    if (auto s = run.split("y-split-certificate", "I(Y_n \\ N[e_n]) -> I(Y_n \\ e_n) is null-homotopic", y,
                           y_split_certificate(m, n))) {
        run.check("y-split-zigzag-end", "zig-zag ends at Z''_n", s->final == zpp);
        const BettiMap link = run.homology(s->link).betti;
        const BettiMap deleted = run.homology(s->deleted).betti;
        const BettiMap hz = run.homology(z).betti;
        run.check_betti("y-link-to-z", "I(Y_n \\ N[e_n]) ≃ I(Z_n)", link, hz);
        run.check_betti("z-equals-zprime", "I(Z_n) ≃ I(Z'_n)", hz, run.homology(zp).betti);
        run.check_betti("zdoubleprime-equals-zprime", "I(Z''_n) ≃ I(Z'_n)", run.homology(zpp).betti,
                        run.homology(zp).betti);
        run.check_betti("z-suspension", "I(Z_n) ≃ Σ^m I(Delta^m_{n-4})", hz, shift(d4, m));

        // Y_n \ e_n folds to W_n by removing each f^k_{n-3} against f^k_{n-1}.
        Graph current = s->deleted;
        bool folds_ok = true;
        for (int k = 1; k <= m && folds_ok; ++k) {
            FoldStep step{VertexLabel::f(k, n - 3), VertexLabel::f(k, n - 1)};
            folds_ok = is_valid_fold(current, step);
            if (folds_ok)
                current = delete_vertices(current, {step.removed});
        }
        run.check("deleted-folds-to-w", "Y_n \\ e_n folds to W_n", folds_ok && current == w);
        const BettiMap hw = run.homology(w).betti;
        run.check_betti("deleted-equals-w", "I(Y_n \\ e_n) ≃ I(W_n)", deleted, hw);
        run.check_betti("w-suspension", "I(W_n) ≃ Σ^m I(Delta^m_{n-3})", hw, shift(d3, m));
        run.check_betti("y-split-wedge", "I(Y_n) ≃ I(Y_n \\ e_n) ∨ Σ I(Y_n \\ N[e_n])", h_y.betti,
                        add(deleted, shift(link, 1)));
    }
    run.check_betti("y-decomposition", "I(Y_n) ≃ Σ^m I(Delta^m_{n-3}) ∨ Σ^{m+1} I(Delta^m_{n-4})", h_y.betti,
                    add(shift(d3, m), shift(d4, m + 1)));

    run.check_betti("recursion",
                    "I(Delta^m_n) ≃ Σ^2 I(Delta^m_{n-3}) ∨ Σ^m I(Delta^m_{n-3}) ∨ Σ^{m+1} I(Delta^m_{n-4})",
                    h_delta.betti, add(add(shift(d3, 2), shift(d3, m)), shift(d4, m + 1)));
    run.check_betti("prediction", "I(Delta^m_n) ≃ " + predict(m, n).str(), h_delta.betti,
                    descriptor_betti(predict(m, n)));
    run.check("torsion-free", "every computed homology group is free", run.torsion_free(),
              "homology of Delta^m_n: " + betti_text(h_delta));
    return report;
}

nlohmann::ordered_json to_json(const StepsReport& report)
{
    nlohmann::ordered_json out;
    out["m"] = report.m;
    out["n"] = report.n;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["claim"] = c.claim;
        item["passed"] = c.passed;
        item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    out["checks"] = std::move(checks);
    out["passed"] = report.all_passed();
    return out;
}

}  // namespace gridmatch
