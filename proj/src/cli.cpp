#include "gridmatch/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "gridmatch/errors.hpp"
#include "gridmatch/families.hpp"
#include "gridmatch/graph_io.hpp"
#include "gridmatch/verify.hpp"

namespace gridmatch {

namespace {

struct Options {
    std::string family;
    int m = 0;
    int n = 0;
    std::string m_range;
    std::string n_range;
    std::string input;
    std::string complex = "independence";
    bool reduce = false;
    std::optional<int> max_dim;
    std::size_t max_faces = Caps{}.max_faces;
    std::size_t max_matrix = Caps{}.max_matrix;
    unsigned workers = 1;
    bool json = false;
    bool csv = false;
    std::string output;

    Caps caps() const { return Caps{max_faces, max_matrix}; }
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// "3", "1..10" or "2,3,5".
std::vector<int> parse_range(const std::string& text)
{
    auto number = [&](std::string_view s) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size())
            throw UsageError("bad range: " + text);
        return value;
    };
    std::vector<int> out;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        if (auto dots = item.find(".."); dots != std::string_view::npos) {
            const int lo = number(item.substr(0, dots));
            const int hi = number(item.substr(dots + 2));
            for (int v = lo; v <= hi; ++v)
                out.push_back(v);
        } else {
            out.push_back(number(item));
        }
    }
    if (out.empty())
        throw UsageError("empty range: " + text);
    return out;
}

void emit(const Options& opt, const std::string& text, std::ostream& out)
{
    if (opt.output.empty() || opt.output == "-") {
        out << text;
        return;
    }
    std::ofstream file(opt.output);
    if (!file)
        throw UsageError("cannot write " + opt.output);
    file << text;
}

Graph build_family(const Options& opt)
{
    if (opt.family == "grid")
        return grid_graph(opt.m, opt.n);
    if (opt.family == "delta")
        return delta_graph(opt.m, opt.n);
    if (opt.family == "line-of-grid")
        return line_graph(grid_graph(opt.m, opt.n));
    if (opt.family.rfind("named:", 0) == 0)
        return named_subgraph(parse_named_kind(opt.family.substr(6)), opt.m, opt.n);
    throw UsageError("unknown family: " + opt.family);
}

int cmd_build(const Options& opt, std::ostream& out, std::ostream& err)
{
    Graph g = build_family(opt);
    emit(opt, graph_to_json(g).dump(2) + "\n", out);
    err << "built " << opt.family << " (m=" << opt.m << ", n=" << opt.n << "): " << g.vertex_count()
        << " vertices, " << g.edge_count() << " edges\n";
    return kExitOk;
}

int cmd_homology(const Options& opt, std::ostream& out, std::ostream& err)
{
    Graph g;
    if (opt.input.empty() || opt.input == "-") {
        Json j = Json::parse(std::cin, nullptr, false);
        if (j.is_discarded())
            throw ParseError("malformed JSON on standard input");
        g = graph_from_json(j);
    } else {
        g = read_graph(opt.input);
    }
    ComplexKind kind;
    if (opt.complex == "independence")
        kind = ComplexKind::Independence;
    else if (opt.complex == "matching")
        kind = ComplexKind::Matching;
    else
        throw UsageError("--complex must be independence or matching");

    GraphHomology run = compute_graph_homology(g, kind, opt.reduce, opt.max_dim, opt.caps(), opt.workers);
    emit(opt, to_json(run.homology).dump() + "\n", out);
    err << opt.complex << " complex: " << (run.contractible_halt ? "contractible (fold halt)" : "computed")
        << "; vertices " << run.stats.vertices_before << " -> " << run.stats.vertices_after << ", "
        << run.stats.faces_enumerated << " faces\n";
    return kExitOk;
}

int cmd_predict(const Options& opt, std::ostream& out, std::ostream&)
{
    WedgeDescriptor d = predict(opt.m, opt.n);
    if (opt.json) {
        nlohmann::ordered_json j;
        j["m"] = opt.m;
        j["n"] = opt.n;
        j["text"] = d.str();
        j["descriptor"] = d.to_json();
        emit(opt, j.dump() + "\n", out);
    } else {
        emit(opt, d.str() + "\n", out);
    }
    return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err)
{
    if (opt.m < 1 || opt.n < 1)
        throw UsageError("verify needs --m >= 1 and --n >= 1");
    VerificationReport r = verify_instance(opt.m, opt.n, opt.reduce, opt.caps(), opt.workers);
    emit(opt, to_json(r).dump(2) + "\n", out);
    if (r.skipped) {
        err << "verify m=" << r.m << " n=" << r.n << ": skipped (" << r.skip_reason << ")\n";
        return kExitResourceCap;
    }
    err << "verify m=" << r.m << " n=" << r.n << ": predicted " << r.predicted.str() << ", computed "
        << to_json(r.computed).dump() << " -> " << (r.passed() ? "match" : "MISMATCH") << "\n";
    return r.passed() ? kExitOk : kExitMismatch;
}

int cmd_suite(const Options& opt, std::ostream& out, std::ostream& err)
{
    const auto ms = parse_range(opt.m_range);
    const auto ns = parse_range(opt.n_range);
    if (std::any_of(ms.begin(), ms.end(), [](int v) { return v < 1; }) ||
        std::any_of(ns.begin(), ns.end(), [](int v) { return v < 1; }))
        throw UsageError("suite ranges must be positive");

    auto reports = run_suite(ms, ns, opt.reduce, opt.caps(), opt.workers);
    SuiteSummary s = summarize(reports);
    if (opt.csv) {
        emit(opt, suite_csv(reports), out);
    } else {
        nlohmann::ordered_json j;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& r : reports)
            rows.push_back(to_json(r));
        j["rows"] = std::move(rows);
        j["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"skipped", s.skipped}};
        emit(opt, j.dump(2) + "\n", out);
    }
    for (const auto& r : reports)
        if (!r.skipped && !r.passed())
            err << "MISMATCH m=" << r.m << " n=" << r.n << "\n";
    err << "suite: " << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
    if (s.skipped == reports.size())
        err << "warning: every instance exceeded the resource caps\n";
    return s.failed == 0 ? kExitOk : kExitMismatch;
}

int cmd_steps(const Options& opt, std::ostream& out, std::ostream& err)
{
    if (opt.m < 2 || opt.n < 5)
        throw UsageError("steps needs --m >= 2 and --n >= 5");
    StepsReport report = run_steps(opt.m, opt.n, opt.caps());
    emit(opt, to_json(report).dump(2) + "\n", out);
    for (const auto& c : report.checks)
        err << (c.passed ? "  pass  " : "  FAIL  ") << c.name << ": " << c.claim << "\n";
    if (const StepCheck* bad = report.first_failure()) {
        err << "steps m=" << opt.m << " n=" << opt.n << ": failed claim " << bad->name << " (" << bad->claim
            << ")\n";
        return kExitMismatch;
    }
    err << "steps m=" << opt.m << " n=" << opt.n << ": all " << report.checks.size() << " checks passed\n";
    return kExitOk;
}

void add_caps(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--max-faces", opt.max_faces, "Face cap for complex construction");
    cmd->add_option("--max-matrix", opt.max_matrix, "Row/column cap for boundary matrices");
}

void add_output(CLI::App* cmd, Options& opt)
{
    cmd->add_option("-o,--output", opt.output, "Write machine output to this file");
    cmd->add_flag("--json", opt.json, "JSON output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    CLI::App app{"Independence and matching complexes of grid-like graphs: build, homology, predict, verify"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "Write a graph family as JSON");
    build->add_option("--family", opt.family, "grid | delta | line-of-grid | named:<X|Y|Z|Zprime|Zdoubleprime|W>")
        ->required();
    build->add_option("--m", opt.m, "Rows (grid) or number of f-rows (delta)")->required();
    build->add_option("--n", opt.n, "Columns (grid) or spine length (delta)")->required();
    add_output(build, opt);

    auto* homology = app.add_subcommand("homology", "Reduced integral homology of a graph's complex");
    homology->add_option("input", opt.input, "Graph JSON file ('-' or omitted: standard input)");
    homology->add_option("--complex", opt.complex, "independence | matching");
    homology->add_flag("--reduce", opt.reduce, "Fold dominated vertices first");
    homology->add_option("--max-dim", opt.max_dim, "Highest dimension to report");
    homology->add_option("--workers", opt.workers, "Threads for boundary reductions");
    add_caps(homology, opt);
    add_output(homology, opt);

    auto* predict_cmd = app.add_subcommand("predict", "Predicted homotopy type of I(Delta^m_n)");
    predict_cmd->add_option("--m", opt.m)->required()->check(CLI::PositiveNumber);
    predict_cmd->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);
    add_output(predict_cmd, opt);

    auto* verify = app.add_subcommand("verify", "Compare computed homology of I(Delta^m_n) with the prediction");
    verify->add_option("--m", opt.m)->required();
    verify->add_option("--n", opt.n)->required();
    verify->add_flag("--reduce", opt.reduce, "Fold dominated vertices first");
    verify->add_option("--workers", opt.workers, "Threads for boundary reductions");
    add_caps(verify, opt);
    add_output(verify, opt);

    auto* suite = app.add_subcommand("suite", "Verify a table of (m, n) instances");
    suite->add_option("--m", opt.m_range, "m values: 3, 1..4 or 1,2,5")->required();
    suite->add_option("--n", opt.n_range, "n values")->required();
    suite->add_flag("--reduce", opt.reduce, "Fold dominated vertices first");
    suite->add_option("--workers", opt.workers, "Rows verified concurrently");
    suite->add_flag("--csv", opt.csv, "CSV instead of JSON");
    add_caps(suite, opt);
    add_output(suite, opt);

    auto* steps = app.add_subcommand("steps", "Check every intermediate equivalence of the recursion");
    steps->add_option("--m", opt.m)->required();
    steps->add_option("--n", opt.n)->required();
    add_caps(steps, opt);
    add_output(steps, opt);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed())
            return cmd_build(opt, out, err);
        if (homology->parsed())
            return cmd_homology(opt, out, err);
        if (predict_cmd->parsed())
            return cmd_predict(opt, out, err);
        if (verify->parsed())
            return cmd_verify(opt, out, err);
        if (suite->parsed())
            return cmd_suite(opt, out, err);
        if (steps->parsed())
            return cmd_steps(opt, out, err);
    } catch (const ResourceLimitError& ex) {
        err << "resource cap exceeded: " << ex.what() << "\n";
        return kExitResourceCap;
    } catch (const ParseError& ex) {
        err << "input error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& ex) {
        err << "usage error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& ex) {
        err << "invalid parameters: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gridmatch
