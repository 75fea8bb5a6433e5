#include "triclique/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace triclique {
namespace {

struct Line {
    std::size_t number;
    std::string text;
};

bool blank_or_comment(const std::string& s, char comment)
{
    for (char c : s) {
        if (c == ' ' || c == '\t' || c == '\r')
            continue;
        return c == comment;
    }
    return true;
}

std::vector<Line> meaningful_lines(std::istream& in, char comment)
{
    std::vector<Line> out;
    std::string s;
    std::size_t no = 0;
    while (std::getline(in, s)) {
        ++no;
        if (!blank_or_comment(s, comment))
            out.push_back({no, s});
    }
    return out;
}

std::uint64_t parse_count(std::istringstream& ss, std::size_t line, const char* what)
{
    long long v = 0;
    if (!(ss >> v))
        throw ParseError(line, std::string("expected ") + what);
    if (v < 0)
        throw ParseError(line, std::string(what) + " must be non-negative");
    return static_cast<std::uint64_t>(v);
}

void expect_end(std::istringstream& ss, std::size_t line)
{
    std::string rest;
    if (ss >> rest)
        throw ParseError(line, "unexpected trailing token '" + rest + "'");
}

// Checks an endpoint pair against n and the pairs seen so far, reporting the line.
void check_pair(std::uint64_t u, std::uint64_t v, std::uint64_t n, std::set<std::pair<std::uint64_t, std::uint64_t>>& seen,
                std::size_t line)
{
    if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(line, "vertex outside 1.." + std::to_string(n));
    if (u == v)
        throw ParseError(line, "self-loop on vertex " + std::to_string(u));
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
        throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    auto lines = meaningful_lines(in, '#');
    if (lines.empty())
        throw ParseError(0, "empty input: expected header \"n m\"");

    std::istringstream head(lines[0].text);
    const auto n = parse_count(head, lines[0].number, "vertex count n");
    const auto m = parse_count(head, lines[0].number, "edge count m");
    expect_end(head, lines[0].number);
    if (n == 0)
        throw ParseError(lines[0].number, "vertex count must be positive");
    if (lines.size() - 1 != m)
        throw ParseError(lines[0].number,
                         "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));

    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(m);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ss(lines[i].text);
        const auto u = parse_count(ss, lines[i].number, "endpoint u");
        const auto v = parse_count(ss, lines[i].number, "endpoint v");
        expect_end(ss, lines[i].number);
        check_pair(u, v, n, seen, lines[i].number);
        pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return Graph::from_edge_list(n, pairs);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

Graph read_dimacs(std::istream& in)
{
    auto lines = meaningful_lines(in, 'c');
    std::uint64_t n = 0, m = 0;
    bool have_header = false;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;

    for (const auto& l : lines) {
        std::istringstream ss(l.text);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            if (have_header)
                throw ParseError(l.number, "second problem line");
            std::string kind;
            ss >> kind;
            if (kind != "edge" && kind != "col")
                throw ParseError(l.number, "expected \"p edge n m\"");
            n = parse_count(ss, l.number, "vertex count");
            m = parse_count(ss, l.number, "edge count");
            expect_end(ss, l.number);
            if (n == 0)
                throw ParseError(l.number, "vertex count must be positive");
            have_header = true;
        } else if (tag == "e") {
            if (!have_header)
                throw ParseError(l.number, "edge line before problem line");
            const auto u = parse_count(ss, l.number, "endpoint u");
            const auto v = parse_count(ss, l.number, "endpoint v");
            expect_end(ss, l.number);
            check_pair(u, v, n, seen, l.number);
            pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } else {
            throw ParseError(l.number, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header)
        throw ParseError(0, "missing problem line \"p edge n m\"");
    if (pairs.size() != m)
        throw ParseError(0, "problem line declares " + std::to_string(m) + " edges, found " + std::to_string(pairs.size()));
    return Graph::from_edge_list(n, pairs);
}

void write_dimacs(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in)
{
    std::stringstream buf;
    buf << in.rdbuf();
    const auto text = buf.str();

    std::istringstream scan(text);
    std::string s;
    while (std::getline(scan, s)) {
        if (blank_or_comment(s, '#'))
            continue;
        const auto pos = s.find_first_not_of(" \t");
        const char c = s[pos];
        std::istringstream again(text);
        if (c == 'p' || c == 'c')
            return read_dimacs(again);
        return read_edge_list(again);
    }
    throw ParseError(0, "empty input");
}

Graph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

Graph load_graph(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    if (format == GraphFormat::Dimacs)
        write_dimacs(out, g);
    else
        write_edge_list(out, g);
    if (!out)
        throw Error(ErrorCode::Io, "write failed for " + path.string());
}

} // namespace triclique
