#include "triclique/triangles.hpp"

#include <algorithm>
#include <numeric>

namespace triclique {

std::vector<Triangle> enumerate_triangles(const Graph& g)
{
    std::vector<Triangle> out;
    const auto n = static_cast<VertexId>(g.vertex_count());
    for (VertexId u = 1; u <= n; ++u) {
        auto nu = g.neighbors(u);
        for (VertexId v : nu) {
            if (v <= u)
                continue;
            auto nv = g.neighbors(v);
            // Common neighbours w > v by merging the two sorted lists.
            auto i = std::upper_bound(nu.begin(), nu.end(), v);
            auto j = std::upper_bound(nv.begin(), nv.end(), v);
            while (i != nu.end() && j != nv.end()) {
                if (*i < *j) {
                    ++i;
                } else if (*j < *i) {
                    ++j;
                } else {
                    const VertexId w = *i;
                    Triangle t;
                    t.id = static_cast<TriangleId>(out.size() + 1);
                    t.vertices = {u, v, w};
                    t.edges = {*g.edge_between(u, v), *g.edge_between(u, w), *g.edge_between(v, w)};
                    std::sort(t.edges.begin(), t.edges.end());
                    out.push_back(t);
                    ++i;
                    ++j;
                }
            }
        }
    }
    return out;
}

std::uint64_t WeightVector::total() const
{
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

WeightVector edge_weight_vector(const Graph& g, std::span<const Triangle> ts)
{
    WeightVector w{WeightKind::PerEdge, std::vector<std::uint32_t>(g.edge_count(), 0)};
    for (const auto& t : ts)
        for (EdgeId e : t.edges) {
            if (e < 1 || e > g.edge_count())
                throw Error(ErrorCode::EdgeOutOfRange,
                            "triangle " + std::to_string(t.id) + " names edge " + std::to_string(e));
            ++w.counts[e - 1];
        }
    return w;
}

WeightVector vertex_weight_vector(const Graph& g, std::span<const Triangle> ts)
{
    WeightVector w{WeightKind::PerVertex, std::vector<std::uint32_t>(g.vertex_count(), 0)};
    for (const auto& t : ts)
        for (VertexId v : t.vertices) {
            if (v < 1 || v > g.vertex_count())
                throw Error(ErrorCode::VertexOutOfRange,
                            "triangle " + std::to_string(t.id) + " names vertex " + std::to_string(v));
            ++w.counts[v - 1];
        }
    return w;
}

MinMax min_max(const WeightVector& w)
{
    MinMax r;
    for (auto c : w.counts) {
        r.max = std::max(r.max, c);
        if (c > 0 && (r.all_zero || c < r.min)) {
            r.min = c;
            r.all_zero = false;
        }
    }
    return r;
}

EdgeSet triangle_edge_set(const Graph& g, const Triangle& t)
{
    EdgeSet s(g.edge_count());
    for (EdgeId e : t.edges)
        s.insert(e);
    return s;
}

EdgeSet ring_sum(const Graph& g, std::span<const Triangle> ts)
{
    EdgeSet s(g.edge_count());
    for (const auto& t : ts)
        s ^= triangle_edge_set(g, t);
    return s;
}

TriangleIndex::TriangleIndex(Graph g) : graph_(std::move(g)), triangles_(enumerate_triangles(graph_))
{
    const auto m = graph_.edge_count();
    edge_off_.assign(m + 1, 0);
    for (const auto& t : triangles_)
        for (EdgeId e : t.edges)
            ++edge_off_[e];
    std::partial_sum(edge_off_.begin(), edge_off_.end(), edge_off_.begin());
    edge_tri_.resize(edge_off_[m]);
    auto fill = edge_off_;
    for (const auto& t : triangles_)
        for (EdgeId e : t.edges)
            edge_tri_[fill[e - 1]++] = t.id;
}

const Triangle& TriangleIndex::triangle(TriangleId id) const
{
    if (id < 1 || id > triangles_.size())
        throw Error(ErrorCode::InvalidParameter, "triangle id " + std::to_string(id) + " out of range");
    return triangles_[id - 1];
}

std::span<const TriangleId> TriangleIndex::through_edge(EdgeId e) const
{
    if (e < 1 || e > graph_.edge_count())
        throw Error(ErrorCode::EdgeOutOfRange, "edge id " + std::to_string(e) + " out of range");
    return {edge_tri_.data() + edge_off_[e - 1], edge_off_[e] - edge_off_[e - 1]};
}

std::optional<TriangleId> TriangleIndex::find(VertexId a, VertexId b, VertexId c) const
{
    std::array<VertexId, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    auto e = graph_.edge_between(key[0], key[1]);
    if (!e)
        return std::nullopt;
    for (TriangleId id : through_edge(*e))
        if (triangles_[id - 1].vertices == key)
            return id;
    return std::nullopt;
}

WeightVector TriangleIndex::edge_weights(const TriangleSet& subset) const
{
    WeightVector w{WeightKind::PerEdge, std::vector<std::uint32_t>(graph_.edge_count(), 0)};
    subset.for_each([&](TriangleId id) {
        for (EdgeId e : triangles_[id - 1].edges)
            ++w.counts[e - 1];
    });
    return w;
}

} // namespace triclique
