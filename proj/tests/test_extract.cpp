#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "triclique/extract.hpp"
#include "triclique/fixtures.hpp"
#include "triclique/generators.hpp"

using namespace triclique;
using namespace triclique::test;

namespace {

ErrorCode code_of(auto f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Io;
}

} // namespace

TEST_CASE("is_clique")
{
    const auto g3 = load_fixture("g3").graph;
    CHECK(is_clique(g3, vs(12, {1, 2, 3, 8, 11})));
    CHECK_FALSE(is_clique(g3, vs(12, {1, 2, 3, 8, 12})));
    for (VertexId v = 1; v <= 12; ++v)
        CHECK(is_clique(g3, vs(12, {v})));
    CHECK(is_clique(g3, VertexSet(12)));

    const auto g2 = load_fixture("g2").graph;
    CHECK_FALSE(g2.adjacent(4, 6));
    CHECK_FALSE(is_clique(g2, vs(7, {1, 3, 4, 6, 7})));
    CHECK(is_clique(g2, vs(7, {1, 3, 4, 5, 7})));
    CHECK_THROWS_AS(is_clique(g2, VertexSet(8)), Error);
}

TEST_CASE("subgraph for an edge")
{
    SUBCASE("G1 main iteration, e4")
    {
        const auto g = load_fixture("g1").graph;
        TriangleIndex idx(g);
        const auto t = full_trace(idx);
        const auto sub = subgraph_for_edge(idx, main_iteration(t).surviving, 4);
        CHECK(sub.vertices.labels() == L({1, 2, 3, 4, 5}));
        CHECK(sub.triangles.size() == 10);
        CHECK(is_clique(g, sub.vertices));
    }
    SUBCASE("G2 full set, e1")
    {
        TriangleIndex idx(load_fixture("g2").graph);
        CHECK(subgraph_for_edge(idx, idx.all(), 1).vertices.labels() == L({1, 2, 3, 6, 7}));
    }
    SUBCASE("Turan graph, e1")
    {
        TriangleIndex idx(load_fixture("turan13").graph);
        CHECK(idx.graph().edge(1) == Edge{1, 4});
        CHECK(idx.through_edge(1).size() == 7);
        const auto sub = subgraph_for_edge(idx, idx.all(), 1);
        CHECK(sub.vertices.labels() == L({1, 4, 7, 8, 9, 10, 11, 12, 13}));
        CHECK_FALSE(is_clique(idx.graph(), sub.vertices));
    }
    SUBCASE("zero-weight edge")
    {
        TriangleIndex idx(load_fixture("g1").graph);
        const auto t = full_trace(idx);
        // e5 lost all its triangles in the first step.
        CHECK(code_of([&] { subgraph_for_edge(idx, main_iteration(t).surviving, 5); }) == ErrorCode::ZeroWeightEdge);
    }
}

TEST_CASE("extract_max_clique on the worked graphs")
{
    const auto g3 = extract_max_clique(load_fixture("g3").graph);
    CHECK(g3.vertices.labels() == L({1, 2, 3, 8, 11}));
    CHECK(g3.verified);
    CHECK(g3.depth == 0);
    CHECK_FALSE(g3.degenerate);

    const auto g3e = extract_max_clique(load_fixture("g3").graph, {TraceMode::EarlyStop, false, std::nullopt});
    CHECK(g3e.vertices == g3.vertices);

    const auto g1 = extract_max_clique(load_fixture("g1").graph);
    CHECK(g1.size() == 5);
    CHECK((g1.vertices.labels() == L({1, 2, 3, 4, 5}) || g1.vertices.labels() == L({6, 7, 8, 9, 10})));
    CHECK(g1.main_iteration == 2u);

    const auto mm = extract_max_clique(moon_moser(4));
    CHECK(mm.size() == 4);
    CHECK(mm.verified);
    CHECK(mm.vertices.labels() == L({1, 4, 7, 10}));
}

TEST_CASE("seeded extraction on G1")
{
    const auto g = load_fixture("g1").graph;
    const auto r = extract_max_clique(g, {TraceMode::Exhaustive, false, EdgeId{4}});
    CHECK(r.vertices.labels() == L({1, 2, 3, 4, 5}));
    CHECK(r.witness_triangles.size() == 10);
    CHECK(r.seed_edges == L({4}));
    TriangleIndex idx(g);
    for (TriangleId t : r.witness_triangles)
        for (VertexId v : idx.triangle(t).vertices)
            CHECK(r.vertices.contains(v));

    CHECK(code_of([&] { extract_max_clique(g, {TraceMode::Exhaustive, false, EdgeId{5}}); }) ==
          ErrorCode::ZeroWeightEdge);
    CHECK(code_of([&] { extract_max_clique(g, {TraceMode::Exhaustive, false, EdgeId{99}}); }) ==
          ErrorCode::EdgeOutOfRange);
}

TEST_CASE("recursion maps back to input labels")
{
    const auto g = load_fixture("turan13").graph;
    const auto r = extract_max_clique(g);
    CHECK(r.depth == 1);
    CHECK(r.vertices.labels() == L({1, 4, 7, 10}));
    CHECK(r.seed_edges.size() == 2);
    CHECK(r.seed_edges[0] == 7);  // (1,10): first edge of weight MIN = 6
    for (EdgeId e : r.seed_edges)
        CHECK(r.vertices.contains(g.edge(e).u));
    CHECK(r.witness_triangles.size() == 4);
    CHECK(r.verified);
}

TEST_CASE("fallback when H does not shrink")
{
    // Two pages on the spine 1-2; seeding the spine makes H the whole graph.
    const auto book = make(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const auto r = extract_max_clique(book, {TraceMode::Exhaustive, false, EdgeId{1}});
    CHECK(r.fallback_used);
    CHECK(r.depth == 1);
    CHECK(r.vertices.labels() == L({1, 2, 4}));
    CHECK(r.verified);

    const auto plain = extract_max_clique(book);
    CHECK_FALSE(plain.fallback_used);
    CHECK(plain.size() == 3);
}

TEST_CASE("degenerate inputs")
{
    const auto c5 = extract_max_clique(cycle(5));
    CHECK(c5.degenerate);
    CHECK(c5.verified);
    CHECK(c5.vertices.labels() == L({1, 2}));
    CHECK(c5.seed_edges == L({1}));
    CHECK_FALSE(c5.main_iteration);

    const auto empty = extract_max_clique(make(3, {}));
    CHECK(empty.degenerate);
    CHECK(empty.vertices.labels() == L({1}));
    CHECK(empty.verified);

    CHECK(code_of([] { extract_max_clique(cycle(5), {TraceMode::Exhaustive, false, EdgeId{1}}); }) ==
          ErrorCode::ZeroWeightEdge);

    const auto pe = cliques_per_min_edge(cycle(4));
    CHECK(pe.distinct.size() == 1);
    CHECK(pe.distinct[0].labels() == L({1, 2}));
    CHECK_FALSE(pe.main_index);
}

TEST_CASE("cliques per minimum edge")
{
    SUBCASE("K4")
    {
        const auto pe = cliques_per_min_edge(complete(4));
        CHECK(pe.by_edge.size() == 6);
        REQUIRE(pe.distinct.size() == 1);
        CHECK(pe.distinct[0].labels() == L({1, 2, 3, 4}));
    }
    SUBCASE("G2 per-edge variants")
    {
        const auto fx = load_fixture("g2");
        const auto pe = cliques_per_min_edge(fx.graph);
        CHECK(pe.main_index == 0u);
        CHECK(pe.min_weight == 3);
        const auto j = nlohmann::json::parse(fx.expected_json);
        std::vector<EdgeId> edges;
        for (const auto& [e, r] : pe.by_edge)
            edges.push_back(e);
        CHECK(edges == L({1, 3, 7, 8, 9, 10, 14, 15, 16}));
        for (const auto& [e, r] : pe.by_edge) {
            CHECK(r.verified);
            CHECK(r.seed_edges.front() == e);
        }
        std::vector<std::vector<VertexId>> distinct;
        for (const auto& s : pe.distinct)
            distinct.push_back(s.labels());
        CHECK(distinct == j["derived_distinct_cliques"].get<std::vector<std::vector<VertexId>>>());
        // Every printed variant except the one for e10 matches.
        for (const auto& [e, r] : pe.by_edge) {
            const auto printed = j["printed_variants"][std::to_string(e)].get<std::vector<VertexId>>();
            CHECK((r.vertices.labels() == printed) == (e != 10));
        }
    }
    SUBCASE("G4 finds all four maximum cliques")
    {
        const auto fx = load_fixture("g4");
        const auto pe = cliques_per_min_edge(fx.graph);
        for (const auto& c : fx.expected.cliques) {
            const auto s = VertexSet::from_range(27, c);
            CHECK(std::find(pe.distinct.begin(), pe.distinct.end(), s) != pe.distinct.end());
        }
    }
}

TEST_CASE("extraction is deterministic")
{
    const auto g = gnp(20, 0.5, 3);
    const auto a = extract_max_clique(g);
    const auto b = extract_max_clique(g);
    CHECK(a.vertices == b.vertices);
    CHECK(a.seed_edges == b.seed_edges);
    CHECK(a.witness_triangles == b.witness_triangles);
    const auto c = extract_max_clique(g, {TraceMode::Exhaustive, true, std::nullopt});
    CHECK(a.vertices == c.vertices);
}
