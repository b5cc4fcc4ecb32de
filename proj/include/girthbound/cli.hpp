#pragma once

// Command-line front end. Every command writes to caller-supplied streams and
// returns its exit code: 0 = all checks pass, 1 = a mathematical expectation
// failed, 2 = usage or I/O error.

#include "bounds.hpp"
#include "constructions.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "meanineq.hpp"
#include "search.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace girthbound::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Thrown by commands for invalid parameters; reported with exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    int first = 1;
    int last = 1;
};

inline Range parse_range(const std::string& text)
{
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            int x = std::stoi(text);
            return {x, x};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw UsageError("invalid range '" + text + "', expected a:b");
    }
}

inline std::string girth_text(const GirthReport& r) { return r.girth ? std::to_string(*r.girth) : "acyclic"; }

// ---------------------------------------------------------------------------
// bound

struct BoundOptions {
    int v = 0, w = 0;
    int girth = 8;
    std::string method = "all";
    bool json = false;
};

inline int cmd_bound(const BoundOptions& o, std::ostream& out)
{
    if (o.v < 1 || o.w < 1) throw UsageError("--v and --w must be >= 1");
    if (o.girth != 6 && o.girth != 8) throw UsageError("--girth must be 6 or 8");
    BoundReport report = bound_report(o.v, o.w, o.girth);
    if (o.method != "all") {
        auto m = parse_method(o.method);
        if (!m) throw UsageError("unknown method '" + o.method + "'");
        auto value = report.value(*m);
        report.values.clear();
        if (value) {
            report.values[*m] = *value;
            report.binding = *m;
        }
    }

    if (o.json) {
        Json doc = report.values.empty() ? Json{{"v", report.v},
                                                {"w", report.w},
                                                {"girth_target", report.girth_target},
                                                {"values", Json::object()},
                                                {"binding", nullptr}}
                                         : to_json(report);
        out << doc.dump(2) << '\n';
        return exit_ok;
    }
    out << "v = " << o.v << ", w = " << o.w << ", girth >= " << o.girth << '\n';
    if (report.values.empty()) {
        out << "  " << o.method << ": not applicable\n";
        return exit_ok;
    }
    for (auto m : {BoundMethod::reiman, BoundMethod::cubic, BoundMethod::cap, BoundMethod::coarse}) {
        auto value = report.value(m);
        if (!value) continue;
        out << "  " << std::left << std::setw(8) << method_name(m) << std::right << std::setw(8) << *value;
        if (m == report.binding) out << "  (binding)";
        out << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructOptions {
    std::string kind;
    std::optional<int> q, t, a, b, v, w, n;
    std::string input; ///< uncoloured graph JSON for `expand`
    std::string out;   ///< empty: graph JSON on stdout
};

inline int require(const std::optional<int>& x, const char* flag, const std::string& kind)
{
    if (!x) throw UsageError("construct " + kind + " needs " + flag);
    return *x;
}

inline BipartiteGraph build(const ConstructOptions& o)
{
    try {
        if (o.kind == "grid") return grid_incidence(require(o.t, "--t", o.kind));
        if (o.kind == "pg2") return pg2_incidence(require(o.q, "--q", o.kind));
        if (o.kind == "wq") return wq_incidence(require(o.q, "--q", o.kind));
        if (o.kind == "complete") {
            int a = require(o.a, "--a", o.kind), b = require(o.b, "--b", o.kind);
            if (a < 0 || b < 0) throw UsageError("--a and --b must be >= 0");
            return complete_bipartite(a, b);
        }
        if (o.kind == "unbalanced6") return unbalanced6(require(o.v, "--v", o.kind), require(o.w, "--w", o.kind));
        if (o.kind == "unbalanced8") return unbalanced8(require(o.v, "--v", o.kind), require(o.w, "--w", o.kind));
        if (o.kind == "expand") {
            if (!o.input.empty()) return expand(simple_graph_from_json(read_json_file(o.input)));
            int n = require(o.n, "--n or --input", o.kind);
            if (n < 0) throw UsageError("--n must be >= 0");
            return expand(SimpleGraph::complete(n));
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown construction '" + o.kind + "'");
}

inline int cmd_construct(const ConstructOptions& o, std::ostream& out)
{
    BipartiteGraph g = build(o);
    if (o.out.empty()) {
        out << to_json(g).dump() << '\n';
        return exit_ok;
    }
    write_json_file(o.out, to_json(g));
    out << o.kind << ": v=" << g.v_count() << " w=" << g.w_count() << " e=" << g.size()
        << " girth=" << girth_text(girth(g)) << " -> " << o.out << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOptions {
    std::string path;
    std::optional<int> expect_girth;
    bool check_equality = false;
};

/// Graphs up to this many vertices also get the enumerated path count.
inline constexpr int enumerate_limit = 40;

inline int cmd_verify(const VerifyOptions& o, std::ostream& out)
{
    BipartiteGraph g = graph_from_json(read_json_file(o.path));
    const Count v = g.v_count(), w = g.w_count(), e = g.size();
    GirthReport gr = girth(g);
    DegreeSummary deg = degree_summary(g);
    bool ok = true;

    out << "graph: v=" << v << " w=" << w << " e=" << e << '\n';
    out << "girth: " << girth_text(gr) << " (C4: " << (gr.has_c4 ? "yes" : "no")
        << ", C6: " << (gr.has_c6 ? "yes" : "no") << ")\n";
    out << "degrees: V " << deg.v_min << ".." << deg.v_max << ", W " << deg.w_min << ".." << deg.w_max
        << (deg.biregular() ? " (biregular)" : "") << '\n';
    const BigInt reiman = eval_reiman(std::min(v, w), std::max(v, w), e);
    const BigInt cubic = eval_cubic(v, w, e);
    out << "O(" << std::min(v, w) << "," << std::max(v, w) << "," << e << ") = " << reiman << '\n';
    out << "P(" << v << "," << w << "," << e << ") = " << cubic << '\n';
    out << "paths3: " << count_paths3(g);
    if (g.vertex_count() <= enumerate_limit) out << " (enumerated " << count_paths3_enumerate(g) << ")";
    out << '\n';

    if (o.expect_girth) {
        bool pass = gr.at_least(*o.expect_girth);
        out << "expect girth >= " << *o.expect_girth << ": " << (pass ? "pass" : "FAIL") << '\n';
        ok = ok && pass;
    }
    if (o.check_equality) {
        bool pass;
        if (gr.at_least(8)) {
            bool gq = verify_weak_gq(g);
            out << "weak generalized quadrangle: " << (gq ? "yes" : "no") << '\n';
            pass = gq && cubic == 0;
            out << "equality P = 0: " << (pass ? "pass" : "FAIL") << '\n';
        } else if (gr.at_least(6)) {
            pass = reiman == 0;
            out << "equality O = 0: " << (pass ? "pass" : "FAIL") << '\n';
        } else {
            pass = false;
            out << "equality: FAIL (girth below 6)\n";
        }
        ok = ok && pass;
    }
    return ok ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------
// search

struct SearchOptions {
    int v = 0, w = 0;
    int girth = 8;
    std::uint64_t nodes = SearchLimits{}.max_nodes;
    double timeout = 60.0; ///< seconds
    int threads = 1;
};

inline SearchLimits limits_of(std::uint64_t nodes, double timeout, int threads)
{
    if (timeout <= 0) throw UsageError("--timeout must be positive");
    if (threads < 1) throw UsageError("--threads must be >= 1");
    SearchLimits limits;
    limits.max_nodes = nodes;
    limits.timeout = std::chrono::milliseconds(static_cast<long long>(timeout * 1000));
    limits.threads = threads;
    return limits;
}

inline int cmd_search(const SearchOptions& o, std::ostream& out)
{
    if (o.v < 1 || o.w < 1) throw UsageError("--v and --w must be >= 1");
    if (o.girth != 6 && o.girth != 8) throw UsageError("--girth must be 6 or 8");
    SearchCertificate cert;
    try {
        cert = max_size(o.v, o.w, o.girth, limits_of(o.nodes, o.timeout, o.threads));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    out << to_json(cert).dump(2) << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------------
// table

struct TableOptions {
    std::string v_range = "1:1";
    std::string w_range = "1:1";
    int girth = 8;
    bool with_search = false;
    std::string format = "csv";
    std::uint64_t nodes = SearchLimits{}.max_nodes;
    double timeout = 60.0;
    int threads = 1;
};

struct TableRow {
    BoundReport bounds;
    std::optional<Count> search;
    std::optional<Count> gap() const
    {
        if (!search) return std::nullopt;
        return bounds.binding_value() - *search;
    }
};

inline std::vector<TableRow> table_rows(const TableOptions& o)
{
    Range vr = parse_range(o.v_range), wr = parse_range(o.w_range);
    if (vr.first < 1 || wr.first < 1 || vr.last < vr.first || wr.last < wr.first)
        throw UsageError("ranges must be nonempty with lower end >= 1");
    if (o.girth != 6 && o.girth != 8) throw UsageError("--girth must be 6 or 8");
    SearchLimits limits = limits_of(o.nodes, o.timeout, o.threads);
    std::vector<TableRow> rows;
    for (int v = vr.first; v <= vr.last; ++v)
        for (int w = wr.first; w <= wr.last; ++w) {
            TableRow row{bound_report(v, w, o.girth), std::nullopt};
            if (o.with_search) {
                try {
                    SearchCertificate cert = max_size(v, w, o.girth, limits);
                    if (cert.exhaustive) row.search = cert.e_max;
                } catch (const std::invalid_argument&) {
                    // out of the search range: leave the cell empty
                }
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

inline int cmd_table(const TableOptions& o, std::ostream& out)
{
    if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
    auto rows = table_rows(o);
    const BoundMethod columns[] = {BoundMethod::reiman, BoundMethod::cubic, BoundMethod::cap, BoundMethod::coarse};
    if (o.format == "json") {
        Json doc = Json::array();
        for (const auto& row : rows) {
            Json r{{"v", row.bounds.v}, {"w", row.bounds.w}, {"girth", row.bounds.girth_target}};
            for (auto m : columns) {
                auto value = row.bounds.value(m);
                r[method_name(m)] = value ? Json(std::to_string(*value)) : Json(nullptr);
            }
            r["search"] = row.search ? Json(*row.search) : Json(nullptr);
            r["gap"] = row.gap() ? Json(*row.gap()) : Json(nullptr);
            doc.push_back(std::move(r));
        }
        out << doc.dump(2) << '\n';
        return exit_ok;
    }
    auto cell = [](std::optional<Count> x) { return x ? std::to_string(*x) : std::string(); };
    out << "v,w,girth,reiman,cubic,cap,coarse,search,gap\n";
    for (const auto& row : rows) {
        out << row.bounds.v << ',' << row.bounds.w << ',' << row.bounds.girth_target;
        for (auto m : columns) out << ',' << cell(row.bounds.value(m));
        out << ',' << cell(row.search) << ',' << cell(row.gap()) << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------
// awm

struct AwmOptions {
    std::string matrix;
    std::string rho = "0";
    std::string gamma = "0";
    bool json = false;
};

inline int cmd_awm(const AwmOptions& o, std::ostream& out)
{
    Rational rho, gamma;
    try {
        rho = parse_rational(o.rho);
        gamma = parse_rational(o.gamma);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (rho < 0 || gamma < 0) throw UsageError("--rho and --gamma must be nonnegative");
    NonnegMatrix m = matrix_from_json(read_json_file(o.matrix));
    IneqVerdict verdict = check(m, rho, gamma);
    if (o.json) {
        out << to_json(verdict).dump(2) << '\n';
    } else {
        auto yes = [](bool b) { return b ? "yes" : "no"; };
        out << "matrix: " << m.rows() << " x " << m.cols() << ", e = " << to_string(m.total()) << '\n';
        out << "rho = " << to_string(rho) << ", gamma = " << to_string(gamma) << '\n';
        out << "phi = " << to_string(verdict.phi) << '\n';
        out << "rhs = " << to_string(verdict.rhs) << '\n';
        out << "hypotheses (row sums >= 2 rho, column sums >= 2 gamma): " << yes(verdict.hypotheses_hold) << '\n';
        out << "satisfied: " << yes(verdict.satisfied) << '\n';
        out << "equality: " << yes(verdict.equality) << '\n';
    }
    return verdict.satisfied ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------

/// Parses argv and dispatches. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Size bounds, extremal constructions and exhaustive search for bipartite graphs of girth 6 and 8",
                 "girthbound"};
    app.require_subcommand(1);

    BoundOptions bound;
    auto* bound_cmd = app.add_subcommand("bound", "Evaluate the size bounds for (v, w)");
    bound_cmd->add_option("--v", bound.v, "size of class V")->required();
    bound_cmd->add_option("--w", bound.w, "size of class W")->required();
    bound_cmd->add_option("--girth", bound.girth, "girth target (6 or 8)");
    bound_cmd->add_option("--method", bound.method, "all, reiman, cubic, coarse or cap");
    bound_cmd->add_flag("--json", bound.json, "print JSON");

    ConstructOptions construct;
    auto* construct_cmd = app.add_subcommand("construct", "Build an extremal graph and write it as JSON");
    construct_cmd->add_option("kind", construct.kind, "grid, pg2, wq, complete, expand, unbalanced6, unbalanced8")
        ->required();
    construct_cmd->add_option("--q", construct.q, "prime order (pg2, wq)");
    construct_cmd->add_option("--t", construct.t, "grid parameter");
    construct_cmd->add_option("--a", construct.a, "first part (complete)");
    construct_cmd->add_option("--b", construct.b, "second part (complete)");
    construct_cmd->add_option("--v", construct.v, "class V size (unbalanced6/8)");
    construct_cmd->add_option("--w", construct.w, "class W size (unbalanced6/8)");
    construct_cmd->add_option("--n", construct.n, "expand the complete graph K_n");
    construct_cmd->add_option("--input", construct.input, "expand an uncoloured graph JSON file");
    construct_cmd->add_option("--out", construct.out, "output path (default: JSON on stdout)");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Analyse a graph JSON file");
    verify_cmd->add_option("path", verify.path, "graph JSON file")->required();
    verify_cmd->add_option("--expect-girth", verify.expect_girth, "require every cycle to be at least this long");
    verify_cmd->add_flag("--check-equality", verify.check_equality, "require equality in the size bound");

    SearchOptions search;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive maximum size search");
    search_cmd->add_option("--v", search.v, "size of class V")->required();
    search_cmd->add_option("--w", search.w, "size of class W")->required();
    search_cmd->add_option("--girth", search.girth, "minimum girth (6 or 8)");
    search_cmd->add_option("--nodes", search.nodes, "node budget per subtree");
    search_cmd->add_option("--timeout", search.timeout, "wall-clock budget in seconds");
    search_cmd->add_option("--threads", search.threads, "worker threads");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Tabulate bounds (and search results) over ranges");
    table_cmd->add_option("--v-range", table.v_range, "a:b")->required();
    table_cmd->add_option("--w-range", table.w_range, "a:b")->required();
    table_cmd->add_option("--girth", table.girth, "girth target (6 or 8)");
    table_cmd->add_flag("--with-search", table.with_search, "add exhaustive search results");
    table_cmd->add_option("--format", table.format, "csv or json");
    table_cmd->add_option("--nodes", table.nodes, "node budget per subtree");
    table_cmd->add_option("--timeout", table.timeout, "wall-clock budget per search in seconds");
    table_cmd->add_option("--threads", table.threads, "worker threads");

    AwmOptions awm;
    auto* awm_cmd = app.add_subcommand("awm", "Check the mean inequality on a matrix");
    awm_cmd->add_option("--matrix", awm.matrix, "matrix JSON file")->required();
    awm_cmd->add_option("--rho", awm.rho, "rho as p/q");
    awm_cmd->add_option("--gamma", awm.gamma, "gamma as p/q");
    awm_cmd->add_flag("--json", awm.json, "print JSON");

    std::vector<std::string> argv_storage{"girthbound"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*bound_cmd) return cmd_bound(bound, out);
        if (*construct_cmd) return cmd_construct(construct, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*search_cmd) return cmd_search(search, out);
        if (*table_cmd) return cmd_table(table, out);
        if (*awm_cmd) return cmd_awm(awm, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace girthbound::cli
