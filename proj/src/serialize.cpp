#include "triclique/serialize.hpp"

namespace triclique {

Json to_json(const VertexSet& s)
{
    return s.labels();
}

Json to_json(const WeightVector& w)
{
    return w.counts;
}

Json to_json(std::span<const Triangle> ts)
{
    Json arr = Json::array();
    for (const auto& t : ts)
        arr.push_back({{"id", t.id}, {"vertices", t.vertices}, {"edges", t.edges}});
    return arr;
}

Json to_json(const IterationRecord& r)
{
    return {
        {"i", r.index},
        {"min", r.min},
        {"max", r.max},
        {"surviving", r.surviving.size()},
        {"min_edges", r.min_edges},
        {"removed_ids", r.removed.labels()},
        {"weights", r.weights.counts},
    };
}

Json to_json(const Trace& t, TraceMode mode)
{
    Json it = Json::array();
    for (const auto& r : t.iterations)
        it.push_back(to_json(r));
    return {
        {"mode", to_string(mode)},
        {"main_index", t.main_index ? Json(*t.main_index) : Json(nullptr)},
        {"stopped_early", t.stopped_early},
        {"iterations", std::move(it)},
    };
}

Json to_json(const CliqueResult& r)
{
    return {
        {"vertices", r.vertices.labels()},
        {"size", r.size()},
        {"seed_edges", r.seed_edges},
        {"depth", r.depth},
        {"verified", r.verified},
        {"degenerate", r.degenerate},
        {"fallback_used", r.fallback_used},
        {"witness_triangles", r.witness_triangles},
    };
}

Json to_json(const PerEdgeCliques& p)
{
    Json by_edge = Json::array();
    for (const auto& [e, r] : p.by_edge) {
        auto j = to_json(r);
        j["edge"] = e;
        by_edge.push_back(std::move(j));
    }
    Json distinct = Json::array();
    for (const auto& s : p.distinct)
        distinct.push_back(s.labels());
    return {
        {"main_index", p.main_index ? Json(*p.main_index) : Json(nullptr)},
        {"min_weight", p.min_weight},
        {"by_edge", std::move(by_edge)},
        {"distinct", std::move(distinct)},
    };
}

Json oracle_json(const ExactClique& best, const MaximalCliques& all)
{
    return {
        {"omega", best.omega},
        {"count_maximal", all.cliques.size()},
        {"method", "branch-and-bound+bron-kerbosch"},
        {"nodes_visited", best.nodes + all.nodes},
        {"clique", best.clique.labels()},
    };
}

Json oracle_json(const MaghoutResult& m)
{
    std::size_t omega = 0;
    for (const auto& c : m.cliques)
        omega = std::max(omega, c.size());
    return {
        {"omega", omega},
        {"count_maximal", m.cliques.size()},
        {"method", "maghout"},
        {"nodes_visited", m.peak_terms},
        {"clauses", m.clauses},
    };
}

CliqueResult clique_from_json(const Json& j, std::size_t n)
{
    CliqueResult r;
    r.vertices = VertexSet::from_range(n, j.at("vertices").get<std::vector<VertexId>>());
    r.seed_edges = j.at("seed_edges").get<std::vector<EdgeId>>();
    r.depth = j.at("depth").get<std::size_t>();
    r.verified = j.at("verified").get<bool>();
    r.degenerate = j.at("degenerate").get<bool>();
    r.fallback_used = j.at("fallback_used").get<bool>();
    if (j.contains("witness_triangles"))
        r.witness_triangles = j["witness_triangles"].get<std::vector<TriangleId>>();
    if (j.at("size").get<std::size_t>() != r.vertices.size())
        throw Error(ErrorCode::ParseError, "clique size does not match its vertex list");
    return r;
}

IterationRecord iteration_from_json(const Json& j, std::size_t edges, std::size_t triangles)
{
    IterationRecord r;
    r.index = j.at("i").get<std::size_t>();
    r.min = j.at("min").get<std::uint32_t>();
    r.max = j.at("max").get<std::uint32_t>();
    r.min_edges = j.at("min_edges").get<std::vector<EdgeId>>();
    r.removed = TriangleSet::from_range(triangles, j.at("removed_ids").get<std::vector<TriangleId>>());
    r.weights = {WeightKind::PerEdge, j.at("weights").get<std::vector<std::uint32_t>>()};
    if (r.weights.size() != edges)
        throw Error(ErrorCode::ParseError, "weight vector length does not match the edge count");
    r.surviving = TriangleSet(triangles);
    return r;
}

} // namespace triclique
