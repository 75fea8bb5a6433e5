#include "triclique/fixtures.hpp"

#include <algorithm>

#include "embedded_fixtures.hpp"
#include "json.hpp"
#include "triclique/graph_io.hpp"

namespace triclique {
namespace {

FixtureExpectation parse_expectation(const nlohmann::json& j)
{
    FixtureExpectation x;
    x.vertices = j.at("vertices").get<std::size_t>();
    x.edges = j.at("edges").get<std::size_t>();
    x.triangles = j.at("triangles").get<std::size_t>();
    if (j.contains("omega"))
        x.omega = j["omega"].get<std::size_t>();
    if (j.contains("trace_mode"))
        x.trace_mode = parse_trace_mode(j["trace_mode"].get<std::string>());
    if (j.contains("min_max_sequence"))
        for (const auto& p : j["min_max_sequence"])
            x.min_max_sequence.emplace_back(p.at(0).get<std::uint32_t>(), p.at(1).get<std::uint32_t>());
    if (j.contains("main_iteration"))
        x.main_iteration = j["main_iteration"].get<std::size_t>();
    if (j.contains("weights_by_iteration"))
        for (const auto& [k, v] : j["weights_by_iteration"].items())
            x.weights_by_iteration[std::stoul(k)] = v.get<std::vector<std::uint32_t>>();
    if (j.contains("cliques"))
        x.cliques = j["cliques"].get<std::vector<std::vector<VertexId>>>();
    if (j.contains("sources"))
        x.sources = j["sources"].get<std::map<std::string, std::string>>();
    if (j.contains("notes"))
        x.notes = j["notes"].get<std::vector<std::string>>();
    return x;
}

} // namespace

std::vector<std::string> fixture_names()
{
    std::vector<std::string> names;
    for (const auto& f : detail::embedded_fixtures)
        names.emplace_back(f.name);
    return names;
}

Fixture load_fixture(const std::string& name)
{
    const auto& table = detail::embedded_fixtures;
    auto it = std::find_if(std::begin(table), std::end(table), [&](const auto& f) { return name == f.name; });
    if (it == std::end(table))
        throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");

    Fixture f;
    f.name = name;
    f.edges_text = it->edges;
    f.expected_json = it->expected;
    f.graph = parse_graph(f.edges_text);

    const auto j = nlohmann::json::parse(f.expected_json);
    f.title = j.value("title", "");
    f.expected = parse_expectation(j);
    if (f.expected.vertices != f.graph.vertex_count() || f.expected.edges != f.graph.edge_count())
        throw Error(ErrorCode::ParseError, "fixture '" + name + "' disagrees with its expected sizes");
    return f;
}

} // namespace triclique
