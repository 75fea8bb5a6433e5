#include "triclique/extract.hpp"

#include <algorithm>
#include <tuple>

namespace triclique {
namespace {

CliqueResult degenerate_result(const Graph& g)
{
    CliqueResult r;
    r.vertices = VertexSet(g.vertex_count());
    r.degenerate = true;
    if (g.edge_count() > 0) {
        const auto& e = g.edge(1);
        r.vertices.insert(e.u);
        r.vertices.insert(e.v);
        r.seed_edges.push_back(1);
    } else {
        r.vertices.insert(1);
    }
    r.verified = is_clique(g, r.vertices);
    return r;
}

// Vertex of H \ {u, v} with the most non-neighbours inside H; ties go to the
// vertex on fewer triangles, then to the lower label.
VertexId vertex_to_drop(const TriangleIndex& index, const VertexSet& h, const Edge& seed)
{
    const auto& g = index.graph();
    const auto per_vertex = vertex_weight_vector(g, index.triangles());
    const auto hsize = h.size();
    std::tuple<std::size_t, std::uint32_t, VertexId> best{0, 0, 0};
    VertexId pick = 0;
    h.for_each([&](VertexId x) {
        if (x == seed.u || x == seed.v)
            return;
        std::size_t inside = 0;
        for (VertexId y : g.neighbors(x))
            inside += h.contains(y);
        const std::size_t missing = hsize - 1 - inside;
        // Larger missing first, then smaller triangle count, then smaller label.
        std::tuple<std::size_t, std::uint32_t, VertexId> key{missing, ~per_vertex.at(x), ~x};
        if (pick == 0 || key > best) {
            best = key;
            pick = x;
        }
    });
    return pick;
}

struct Level {
    Graph graph;
    std::vector<VertexId> to_root;  // level label - 1 -> root label
};

// Extraction loop. The root index and trace are passed in so that per-edge runs
// share them.
CliqueResult run(const Graph& root, const TriangleIndex& root_index, const Trace& root_trace,
                 std::optional<EdgeId> seed, const ExtractOptions& options)
{
    CliqueResult out;
    out.main_iteration = root_trace.main_index;
    out.counters = root_trace.counters;

    Level level{root, {}};
    level.to_root.resize(root.vertex_count());
    for (VertexId v = 1; v <= root.vertex_count(); ++v)
        level.to_root[v - 1] = v;

    auto root_edge = [&](const Level& lv, const Edge& e) {
        return *root.edge_between(lv.to_root[e.u - 1], lv.to_root[e.v - 1]);
    };

    std::optional<TriangleIndex> local_index;
    std::optional<Trace> local_trace;
    for (std::size_t depth = 0;; ++depth) {
        const TriangleIndex& index = depth == 0 ? root_index : *local_index;
        const Trace& trace = depth == 0 ? root_trace : *local_trace;
        const auto& g = level.graph;
        const auto& main = main_iteration(trace);

        const EdgeId e = (depth == 0 && seed) ? *seed : main.min_edges.front();
        const auto sub = subgraph_for_edge(index, main.surviving, e);
        out.seed_edges.push_back(root_edge(level, g.edge(e)));

        if (is_clique(g, sub.vertices)) {
            out.vertices = VertexSet(root.vertex_count());
            sub.vertices.for_each([&](VertexId v) { out.vertices.insert(level.to_root[v - 1]); });
            sub.triangles.for_each([&](TriangleId t) {
                const auto& tri = index.triangle(t);
                out.witness_triangles.push_back(*root_index.find(level.to_root[tri.vertices[0] - 1],
                                                                 level.to_root[tri.vertices[1] - 1],
                                                                 level.to_root[tri.vertices[2] - 1]));
            });
            std::sort(out.witness_triangles.begin(), out.witness_triangles.end());
            out.depth = depth;
            out.verified = is_clique(root, out.vertices);
            return out;
        }

        auto next = sub.vertices;
        if (next.size() == g.vertex_count()) {
            next.erase(vertex_to_drop(index, next, g.edge(e)));
            out.fallback_used = true;
        }

        auto induced = induced_subgraph(g, next);
        Level deeper{std::move(induced.graph), {}};
        deeper.to_root.reserve(induced.parent_vertex.size());
        for (VertexId p : induced.parent_vertex)
            deeper.to_root.push_back(level.to_root[p - 1]);
        level = std::move(deeper);

        local_index.emplace(level.graph);
        local_trace = full_trace(*local_index, {options.mode, options.differential});
        out.counters += local_trace->counters;
    }
}

} // namespace

EdgeSubgraph subgraph_for_edge(const TriangleIndex& index, const TriangleSet& surviving, EdgeId e)
{
    const auto& g = index.graph();
    EdgeSubgraph out{VertexSet(g.vertex_count()), index.none()};
    for (TriangleId t : index.through_edge(e)) {
        if (!surviving.contains(t))
            continue;
        for (VertexId v : index.triangle(t).vertices)
            out.vertices.insert(v);
    }
    if (out.vertices.empty())
        throw Error(ErrorCode::ZeroWeightEdge, "no surviving triangle passes through edge " + std::to_string(e));

    surviving.for_each([&](TriangleId t) {
        const auto& vs = index.triangle(t).vertices;
        if (out.vertices.contains(vs[0]) && out.vertices.contains(vs[1]) && out.vertices.contains(vs[2]))
            out.triangles.insert(t);
    });
    return out;
}

bool is_clique(const Graph& g, const VertexSet& vs)
{
    if (vs.capacity() != g.vertex_count())
        throw Error(ErrorCode::InvalidParameter, "vertex set does not belong to this graph");
    const auto labels = vs.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::size_t hits = 0;
        for (VertexId y : g.neighbors(labels[i]))
            hits += vs.contains(y);
        if (hits != labels.size() - 1)
            return false;
    }
    return true;
}

CliqueResult extract_max_clique(const Graph& g, const ExtractOptions& options)
{
    TriangleIndex index(g);
    if (index.size() == 0) {
        if (options.seed_edge)
            throw Error(ErrorCode::ZeroWeightEdge, "graph has no triangles, seed edge cannot be used");
        return degenerate_result(g);
    }
    const auto trace = full_trace(index, {options.mode, options.differential});
    if (options.seed_edge)
        g.edge(*options.seed_edge);  // range check
    return run(g, index, trace, options.seed_edge, options);
}

PerEdgeCliques cliques_per_min_edge(const Graph& g, const ExtractOptions& options)
{
    PerEdgeCliques out;
    TriangleIndex index(g);
    if (index.size() == 0) {
        auto r = degenerate_result(g);
        out.distinct.push_back(r.vertices);
        out.by_edge.emplace_back(r.seed_edges.empty() ? 0 : r.seed_edges.front(), std::move(r));
        return out;
    }
    const auto trace = full_trace(index, {options.mode, options.differential});
    const auto& main = main_iteration(trace);
    out.main_index = trace.main_index;
    out.min_weight = main.min;
    for (EdgeId e : main.min_edges) {
        auto r = run(g, index, trace, e, options);
        if (std::find(out.distinct.begin(), out.distinct.end(), r.vertices) == out.distinct.end())
            out.distinct.push_back(r.vertices);
        out.by_edge.emplace_back(e, std::move(r));
    }
    return out;
}

} // namespace triclique
