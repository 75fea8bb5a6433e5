#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "triclique/fixtures.hpp"
#include "triclique/generators.hpp"
#include "triclique/graph_io.hpp"
#include "triclique/harness.hpp"
#include "triclique/serialize.hpp"

namespace triclique::cli {
namespace {

// Raised when a library result fails its own post-condition.
struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "fixture:<name>" reads an embedded fixture, anything else is a path.
Graph read_input(const std::string& spec)
{
    constexpr std::string_view prefix = "fixture:";
    if (spec.rfind(prefix, 0) == 0)
        return load_fixture(spec.substr(prefix.size())).graph;
    if (spec == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return parse_graph(buf.str());
    }
    return load_graph(spec);
}

std::string join(const std::vector<std::uint32_t>& xs, const char* sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string braces(const VertexSet& s)
{
    return "{" + join(s.labels(), ",") + "}";
}

GraphFormat parse_format(const std::string& f)
{
    if (f == "edges")
        return GraphFormat::EdgeList;
    if (f == "dimacs")
        return GraphFormat::Dimacs;
    throw Error(ErrorCode::InvalidParameter, "unknown format '" + f + "' (edges|dimacs)");
}

void write_graph(std::ostream& out, const std::string& path, const Graph& g, GraphFormat format)
{
    if (path.empty() || path == "-") {
        if (format == GraphFormat::Dimacs)
            write_dimacs(out, g);
        else
            write_edge_list(out, g);
    } else {
        save_graph(path, g, format);
    }
}

std::vector<std::size_t> parse_parts(const std::string& text)
{
    std::vector<std::size_t> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidParameter, "bad part size '" + item + "'");
        }
    }
    return parts;
}

std::size_t parse_count(const std::string& text, const char* what)
{
    try {
        std::size_t used = 0;
        const auto v = std::stoul(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::InvalidParameter, std::string("bad ") + what + " '" + text + "'");
}

double parse_probability(const std::string& text)
{
    try {
        std::size_t used = 0;
        const auto v = std::stod(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::logic_error&) {
    }
    throw Error(ErrorCode::InvalidParameter, "bad probability '" + text + "'");
}

Graph generate(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed)
{
    auto need = [&](std::size_t k, const char* usage) {
        if (params.size() != k)
            throw Error(ErrorCode::InvalidParameter, std::string("usage: generate ") + usage);
    };
    if (family == "complete") {
        need(1, "complete N");
        return complete(parse_count(params[0], "vertex count"));
    }
    if (family == "moon-moser") {
        need(1, "moon-moser K");
        return moon_moser(parse_count(params[0], "triad count"));
    }
    if (family == "multipartite") {
        need(1, "multipartite A,B,...");
        return complete_multipartite(parse_parts(params[0]));
    }
    if (family == "random") {
        need(2, "random N P --seed S");
        return gnp(parse_count(params[0], "vertex count"), parse_probability(params[1]), seed);
    }
    throw Error(ErrorCode::InvalidParameter,
                "unknown family '" + family + "' (complete|moon-moser|multipartite|random)");
}

void print_trace_table(std::ostream& out, const Trace& t)
{
    out << std::setw(4) << "i" << std::setw(8) << "|C_i|" << std::setw(6) << "MIN" << std::setw(6) << "MAX"
        << std::setw(9) << "removed" << "  min edges\n";
    for (const auto& r : t.iterations) {
        out << std::setw(4) << r.index << std::setw(8) << r.surviving.size() << std::setw(6) << r.min << std::setw(6)
            << r.max << std::setw(9) << r.removed.size() << "  " << join(r.min_edges) << (t.main_index == r.index ? "  <- main" : "")
            << '\n';
    }
}

void check_result(const Graph& g, const CliqueResult& r)
{
    if (!r.verified || !is_clique(g, r.vertices))
        throw InvariantViolation("extracted vertex set " + braces(r.vertices) + " is not a clique");
}

void print_clique(std::ostream& out, const CliqueResult& r)
{
    out << braces(r.vertices) << " size " << r.size() << ", seed edges " << join(r.seed_edges, ",") << ", depth "
        << r.depth << (r.verified ? ", verified" : ", NOT verified") << (r.degenerate ? ", degenerate" : "")
        << (r.fallback_used ? ", fallback" : "") << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Options {
    std::string input;
    std::string output;
    std::string format = "edges";
    std::string mode = "exhaustive";
    std::string method = "both";
    std::string family;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::uint64_t budget = default_node_budget;
    std::size_t clause_budget = default_clause_budget;
    std::size_t count = 1000;
    std::size_t min_n = 4;
    std::size_t max_n = 24;
    std::optional<EdgeId> seed_edge;
    bool json = false;
    bool all_min_edges = false;
    bool differential = false;
    bool weights = false;
    bool verbose = false;
};

int cmd_generate(const Options& o, std::ostream& out)
{
    const auto g = generate(o.family, o.params, o.seed);
    write_graph(out, o.output, g, parse_format(o.format));
    return ok;
}

int cmd_analyze(const Options& o, std::ostream& out)
{
    const auto g = read_input(o.input);
    TriangleIndex index(g);
    const auto p0 = index.edge_weights(index.all());
    const auto mm = min_max(p0);
    const auto sep = check_nonseparable(g);
    std::size_t dmin = g.vertex_count() ? g.degree(1) : 0, dmax = 0;
    for (VertexId v = 1; v <= g.vertex_count(); ++v) {
        dmin = std::min(dmin, g.degree(v));
        dmax = std::max(dmax, g.degree(v));
    }
    if (o.json) {
        Json j{{"vertices", g.vertex_count()},
               {"edges", g.edge_count()},
               {"triangles", index.size()},
               {"min_degree", dmin},
               {"max_degree", dmax},
               {"p0_min", mm.min},
               {"p0_max", mm.max},
               {"connected", sep.connected},
               {"bridges", sep.bridges},
               {"articulation_points", sep.articulation_points},
               {"nonseparable", sep.nonseparable()}};
        out << j.dump(2) << '\n';
        return ok;
    }
    out << "vertices      " << g.vertex_count() << '\n'
        << "edges         " << g.edge_count() << '\n'
        << "triangles     " << index.size() << '\n'
        << "degree        " << dmin << ".." << dmax << '\n'
        << "P0 MIN/MAX    " << mm.min << '/' << mm.max << '\n'
        << "connected     " << (sep.connected ? "yes" : "no") << '\n'
        << "bridges       " << sep.bridges.size() << '\n'
        << "cut vertices  " << sep.articulation_points.size() << '\n'
        << "nonseparable  " << (sep.nonseparable() ? "yes" : "no") << '\n';
    return ok;
}

int cmd_triangles(const Options& o, std::ostream& out)
{
    const auto g = read_input(o.input);
    const auto ts = enumerate_triangles(g);
    if (o.json) {
        Json j{{"count", ts.size()}, {"triangles", to_json(std::span<const Triangle>(ts))}};
        if (o.weights) {
            j["edge_weights"] = to_json(edge_weight_vector(g, ts));
            j["vertex_weights"] = to_json(vertex_weight_vector(g, ts));
        }
        out << j.dump(2) << '\n';
        return ok;
    }
    out << ts.size() << " triangles\n";
    for (const auto& t : ts)
        out << "c" << t.id << "  e{" << t.edges[0] << ',' << t.edges[1] << ',' << t.edges[2] << "}  v{" << t.vertices[0]
            << ',' << t.vertices[1] << ',' << t.vertices[2] << "}\n";
    if (o.weights) {
        out << "P = <" << join(edge_weight_vector(g, ts).counts, ",") << ">\n";
        out << "vertex weights = <" << join(vertex_weight_vector(g, ts).counts, ",") << ">\n";
    }
    return ok;
}

int cmd_trace(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto g = read_input(o.input);
    const auto mode = parse_trace_mode(o.mode);
    const auto t = full_trace(g, {mode, o.differential});
    if (t.empty())
        err << "warning: graph has no triangles, trace is empty\n";
    if (o.json)
        out << to_json(t, mode).dump(2) << '\n';
    else
        print_trace_table(out, t);
    return ok;
}

int cmd_clique(const Options& o, std::ostream& out)
{
    const auto g = read_input(o.input);
    ExtractOptions eo{parse_trace_mode(o.mode), o.differential, o.seed_edge};
    if (o.all_min_edges) {
        const auto pe = cliques_per_min_edge(g, eo);
        for (const auto& [e, r] : pe.by_edge)
            check_result(g, r);
        if (o.json) {
            out << to_json(pe).dump(2) << '\n';
            return ok;
        }
        out << "main iteration " << (pe.main_index ? std::to_string(*pe.main_index) : "-") << ", MIN " << pe.min_weight
            << '\n';
        for (const auto& [e, r] : pe.by_edge) {
            out << "e" << e << ": ";
            print_clique(out, r);
        }
        out << pe.distinct.size() << " distinct:";
        for (const auto& s : pe.distinct)
            out << ' ' << braces(s);
        out << '\n';
        return ok;
    }
    const auto r = extract_max_clique(g, eo);
    check_result(g, r);
    if (o.json)
        out << to_json(r).dump(2) << '\n';
    else
        print_clique(out, r);
    return ok;
}

int cmd_oracle(const Options& o, std::ostream& out)
{
    const auto g = read_input(o.input);
    Json results = Json::array();
    if (o.method == "bk" || o.method == "both") {
        const auto best = max_clique_exact(g, o.budget);
        const auto all = enumerate_maximal_cliques(g, o.budget);
        results.push_back(oracle_json(best, all));
    }
    // With "both", Maghout is skipped silently when the complement is over budget.
    if (o.method == "maghout" || (o.method == "both" && complement(g).edge_count() <= o.clause_budget))
        results.push_back(oracle_json(maghout_cliques(g, o.clause_budget)));
    if (results.empty())
        throw Error(ErrorCode::InvalidParameter, "unknown method '" + o.method + "' (bk|maghout|both)");
    if (o.json) {
        out << (results.size() == 1 ? results[0] : results).dump(2) << '\n';
        return ok;
    }
    for (const auto& r : results)
        out << r["method"].get<std::string>() << ": omega " << r["omega"] << ", maximal cliques " << r["count_maximal"]
            << ", nodes " << r["nodes_visited"] << '\n';
    return ok;
}

int cmd_validate(const Options& o, std::ostream& out)
{
    const auto g = read_input(o.input);
    Json j;
    int code = ok;

    auto t0 = std::chrono::steady_clock::now();
    const auto h = extract_max_clique(g);
    j["heuristic"] = {{"size", h.size()}, {"vertices", h.vertices.labels()}, {"verified", h.verified},
                      {"seconds", seconds_since(t0)}};
    if (!h.verified || !is_clique(g, h.vertices))
        code = invariant_violation;

    std::optional<std::size_t> omega;
    t0 = std::chrono::steady_clock::now();
    try {
        const auto best = max_clique_exact(g, o.budget);
        const auto all = enumerate_maximal_cliques(g, o.budget);
        omega = best.omega;
        auto bk = oracle_json(best, all);
        bk["seconds"] = seconds_since(t0);
        j["exact"] = bk;
    } catch (const BudgetExceeded& e) {
        j["exact"] = {{"error", "budget-exceeded"}, {"detail", e.what()}};
        if (code == ok)
            code = budget_exceeded;
    }

    t0 = std::chrono::steady_clock::now();
    try {
        auto m = oracle_json(maghout_cliques(g, o.clause_budget));
        m["seconds"] = seconds_since(t0);
        j["maghout"] = m;
    } catch (const BudgetExceeded& e) {
        j["maghout"] = {{"error", "budget-exceeded"}, {"detail", e.what()}};
    }

    j["omega"] = omega ? Json(*omega) : Json(nullptr);
    j["agree"] = omega ? Json(h.size() == *omega) : Json(nullptr);
    if (omega && h.size() > *omega)
        code = invariant_violation;
    if (j["exact"].contains("count_maximal") && j["maghout"].contains("count_maximal") &&
        j["exact"]["count_maximal"] != j["maghout"]["count_maximal"])
        code = invariant_violation;

    if (o.json) {
        out << j.dump(2) << '\n';
        return code;
    }
    out << "heuristic      " << h.size() << ' ' << braces(h.vertices) << (h.verified ? "" : " NOT a clique") << '\n';
    if (j["exact"].contains("error"))
        out << "exact          budget exceeded\n";
    else
        out << "omega          " << j["exact"]["omega"] << '\n'
            << "maximal        " << j["exact"]["count_maximal"] << '\n';
    if (j["maghout"].contains("error"))
        out << "maghout        skipped (" << j["maghout"]["detail"].get<std::string>() << ")\n";
    else
        out << "maghout        " << j["maghout"]["count_maximal"] << " cliques\n";
    out << "agree          " << (omega ? (h.size() == *omega ? "yes" : "no") : "unknown") << '\n';
    return code;
}

int cmd_convert(const Options& o, std::ostream& out)
{
    const auto g = read_input(o.input);
    write_graph(out, o.output, g, parse_format(o.format));
    return ok;
}

int cmd_compare(const Options& o, std::ostream& out)
{
    const auto specs = corpus_specs(o.count, o.seed, o.min_n, o.max_n);
    Json rows = Json::array();
    const auto rep = compare_on_corpus(specs, o.budget, [&](const CorpusSpec& s, const GraphCheck& c) {
        if (o.verbose)
            rows.push_back({{"n", s.n}, {"p", s.p}, {"seed", s.seed}, {"heuristic", c.heuristic_size},
                            {"omega", c.oracle_ran ? Json(c.omega) : Json(nullptr)}, {"agree", c.agrees}});
    });
    Json j{{"graphs", rep.graphs},
           {"oracle_skipped", rep.oracle_skipped},
           {"not_clique", rep.not_clique},
           {"exceeds_omega", rep.exceeds_omega},
           {"agreements", rep.agreements},
           {"agreement_rate", rep.agreement_rate()},
           {"differential_mismatches", rep.differential_mismatches},
           {"fallbacks", rep.fallbacks}};
    Json dens = Json::array();
    for (const auto& [p, c] : rep.by_density)
        dens.push_back({{"p", p}, {"agreements", c.first}, {"graphs", c.second}});
    j["by_density"] = dens;
    if (o.verbose)
        j["graphs_detail"] = rows;

    const int code = (rep.not_clique || rep.exceeds_omega || rep.differential_mismatches) ? invariant_violation : ok;
    if (o.json) {
        out << j.dump(2) << '\n';
        return code;
    }
    out << "graphs                 " << rep.graphs << '\n'
        << "not a clique           " << rep.not_clique << '\n'
        << "larger than omega      " << rep.exceeds_omega << '\n'
        << "P_i mismatches         " << rep.differential_mismatches << '\n'
        << "oracle skipped         " << rep.oracle_skipped << '\n'
        << "agreement heuristic=w  " << rep.agreements << '/' << (rep.graphs - rep.oracle_skipped) << " ("
        << std::fixed << std::setprecision(1) << 100.0 * rep.agreement_rate() << "%)\n";
    for (const auto& [p, c] : rep.by_density)
        out << "  p=" << std::setprecision(1) << p << "  " << c.first << '/' << c.second << '\n';
    return code;
}

int cmd_fixtures(const Options& o, std::ostream& out)
{
    if (o.input.empty()) {
        for (const auto& n : fixture_names())
            out << n << '\n';
        return ok;
    }
    const auto f = load_fixture(o.input);
    write_graph(out, o.output, f.graph, parse_format(o.format));
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Triangle-pruning maximum clique heuristic with exact oracles"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* c) {
        c->add_option("input", o.input, "graph file, '-' for stdin, or fixture:<name>")->required();
    };
    auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "emit JSON"); };
    auto mode_opt = [&](CLI::App* c) {
        c->add_option("--mode", o.mode, "exhaustive | early-stop")->check(CLI::IsMember({"exhaustive", "early-stop"}));
        c->add_flag("--differential", o.differential, "maintain weights incrementally");
    };

    auto* gen = app.add_subcommand("generate", "write a generated graph");
    gen->add_option("family", o.family, "complete | moon-moser | multipartite | random")->required();
    gen->add_option("params", o.params, "N | K | A,B,... | N P")->required();
    gen->add_option("-o,--output", o.output, "output path (default stdout)");
    gen->add_option("--format", o.format, "edges | dimacs");
    gen->add_option("--seed", o.seed, "seed for random graphs");

    auto* analyze = app.add_subcommand("analyze", "sizes, degrees and separability");
    input(analyze);
    json_flag(analyze);

    auto* tri = app.add_subcommand("triangles", "list all triangles");
    input(tri);
    json_flag(tri);
    tri->add_flag("--weights", o.weights, "also print edge and vertex weight vectors");

    auto* trace = app.add_subcommand("trace", "iteration table of the pruning process");
    input(trace);
    json_flag(trace);
    mode_opt(trace);

    auto* clique = app.add_subcommand("clique", "heuristic clique extraction");
    input(clique);
    json_flag(clique);
    mode_opt(clique);
    clique->add_flag("--all-min-edges", o.all_min_edges, "one result per minimum-weight edge");
    clique->add_option("--seed-edge", o.seed_edge, "edge id to seed the top level");

    auto* oracle = app.add_subcommand("oracle", "exact maximum and maximal cliques");
    input(oracle);
    json_flag(oracle);
    oracle->add_option("--method", o.method, "bk | maghout | both");
    oracle->add_option("--budget", o.budget, "search node budget");
    oracle->add_option("--clause-budget", o.clause_budget, "Maghout clause budget");

    auto* validate = app.add_subcommand("validate", "heuristic against both oracles");
    input(validate);
    json_flag(validate);
    validate->add_option("--budget", o.budget, "search node budget");
    validate->add_option("--clause-budget", o.clause_budget, "Maghout clause budget");

    auto* convert = app.add_subcommand("convert", "rewrite a graph in another format");
    input(convert);
    convert->add_option("output", o.output, "output path, '-' for stdout")->required();
    convert->add_option("--to", o.format, "edges | dimacs");

    auto* compare = app.add_subcommand("compare", "agreement report on a random corpus");
    json_flag(compare);
    compare->add_option("--count", o.count, "number of graphs");
    compare->add_option("--seed", o.seed, "first seed");
    compare->add_option("--min-n", o.min_n, "smallest vertex count");
    compare->add_option("--max-n", o.max_n, "largest vertex count");
    compare->add_option("--budget", o.budget, "search node budget per graph");
    compare->add_flag("--verbose", o.verbose, "include one row per graph (JSON only)");

    auto* fixtures = app.add_subcommand("fixtures", "list embedded fixtures or print one");
    fixtures->add_option("name", o.input, "fixture name");
    fixtures->add_option("-o,--output", o.output, "output path (default stdout)");
    fixtures->add_option("--format", o.format, "edges | dimacs");

    std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? ok : input_error;
    }

    try {
        if (*gen)
            return cmd_generate(o, out);
        if (*analyze)
            return cmd_analyze(o, out);
        if (*tri)
            return cmd_triangles(o, out);
        if (*trace)
            return cmd_trace(o, out, err);
        if (*clique)
            return cmd_clique(o, out);
        if (*oracle)
            return cmd_oracle(o, out);
        if (*validate)
            return cmd_validate(o, out);
        if (*convert)
            return cmd_convert(o, out);
        if (*compare)
            return cmd_compare(o, out);
        if (*fixtures)
            return cmd_fixtures(o, out);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return budget_exceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const InvariantViolation& e) {
        err << "invariant violation: " << e.what() << '\n';
        return invariant_violation;
    }
    return input_error;
}

} // namespace triclique::cli
