#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triclique/graph.hpp"
#include "triclique/prune.hpp"

namespace triclique {

/// Expected values shipped next to each fixture graph. Optional fields are only
/// present where a value was published for that graph.
struct FixtureExpectation {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t triangles = 0;
    std::optional<std::size_t> omega;
    std::optional<TraceMode> trace_mode;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> min_max_sequence;
    std::optional<std::size_t> main_iteration;
    std::map<std::size_t, std::vector<std::uint32_t>> weights_by_iteration;
    std::vector<std::vector<VertexId>> cliques;
    std::map<std::string, std::string> sources;
    std::vector<std::string> notes;
};

struct Fixture {
    std::string name;
    std::string title;
    Graph graph;
    FixtureExpectation expected;
    std::string edges_text;
    std::string expected_json;  // full sidecar, including fixture-specific extras
};

std::vector<std::string> fixture_names();

/// Throws Error(UnknownFixture) for names not in fixture_names().
Fixture load_fixture(const std::string& name);

} // namespace triclique
