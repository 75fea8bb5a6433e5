#include "triclique/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace triclique {

const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorCode::SelfLoop: return "self-loop";
    case ErrorCode::DuplicateEdge: return "duplicate-edge";
    case ErrorCode::EmptyVertexSet: return "empty-vertex-set";
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::UnknownFixture: return "unknown-fixture";
    case ErrorCode::EmptyTriangleSet: return "empty-triangle-set";
    case ErrorCode::EmptyTrace: return "empty-trace";
    case ErrorCode::ZeroWeightEdge: return "zero-weight-edge";
    case ErrorCode::EdgeOutOfRange: return "edge-out-of-range";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::Io: return "io";
    }
    return "unknown";
}

Graph Graph::from_edge_list(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidParameter, "graph needs at least one vertex");

    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());

    std::set<std::pair<VertexId, VertexId>> seen;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        const auto where = " (edge " + std::to_string(i + 1) + ": " + std::to_string(a) + " " + std::to_string(b) + ")";
        if (a < 1 || b < 1 || a > n || b > n)
            throw Error(ErrorCode::VertexOutOfRange, "vertex outside 1.." + std::to_string(n) + where);
        if (a == b)
            throw Error(ErrorCode::SelfLoop, "self-loop" + where);
        Edge e{std::min(a, b), std::max(a, b)};
        if (!seen.insert({e.u, e.v}).second)
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge" + where);
        g.edges_.push_back(e);
    }

    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : g.edges_) {
        ++deg[e.u - 1];
        ++deg[e.v - 1];
    }
    g.off_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        g.off_[v + 1] = g.off_[v] + deg[v];

    const auto total = g.off_[n];
    g.adj_.resize(total);
    g.adj_edge_.resize(total);
    g.inc_.resize(total);

    // Edges are visited in id order, so incidence lists come out ascending.
    std::vector<std::size_t> fill(g.off_.begin(), g.off_.end() - 1);
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
        const auto& e = g.edges_[i];
        const auto id = static_cast<EdgeId>(i + 1);
        g.inc_[fill[e.u - 1]] = id;
        g.adj_[fill[e.u - 1]] = e.v;
        g.adj_edge_[fill[e.u - 1]++] = id;
        g.inc_[fill[e.v - 1]] = id;
        g.adj_[fill[e.v - 1]] = e.u;
        g.adj_edge_[fill[e.v - 1]++] = id;
    }

    std::vector<std::pair<VertexId, EdgeId>> tmp;
    for (std::size_t v = 0; v < n; ++v) {
        tmp.clear();
        for (auto k = g.off_[v]; k < g.off_[v + 1]; ++k)
            tmp.emplace_back(g.adj_[k], g.adj_edge_[k]);
        std::sort(tmp.begin(), tmp.end());
        for (std::size_t k = 0; k < tmp.size(); ++k) {
            g.adj_[g.off_[v] + k] = tmp[k].first;
            g.adj_edge_[g.off_[v] + k] = tmp[k].second;
        }
    }
    return g;
}

const Edge& Graph::edge(EdgeId e) const
{
    if (e < 1 || e > edges_.size())
        throw Error(ErrorCode::EdgeOutOfRange, "edge id " + std::to_string(e) + " outside 1.." + std::to_string(edges_.size()));
    return edges_[e - 1];
}

std::span<const VertexId> Graph::neighbors(VertexId v) const
{
    if (v < 1 || v > n_)
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    return {adj_.data() + off_[v - 1], off_[v] - off_[v - 1]};
}

std::span<const EdgeId> Graph::incident_edges(VertexId v) const
{
    if (v < 1 || v > n_)
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    return {inc_.data() + off_[v - 1], off_[v] - off_[v - 1]};
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const
{
    if (a < 1 || b < 1 || a > n_ || b > n_ || a == b)
        return std::nullopt;
    if (degree(a) > degree(b))
        std::swap(a, b);
    const auto first = adj_.begin() + static_cast<std::ptrdiff_t>(off_[a - 1]);
    const auto last = adj_.begin() + static_cast<std::ptrdiff_t>(off_[a]);
    auto it = std::lower_bound(first, last, b);
    if (it == last || *it != b)
        return std::nullopt;
    return adj_edge_[static_cast<std::size_t>(it - adj_.begin())];
}

VertexSet Graph::neighborhood(VertexId v) const
{
    return VertexSet::from_range(n_, neighbors(v));
}

bool Graph::same_edge_set(const Graph& other) const
{
    if (n_ != other.n_ || edges_.size() != other.edges_.size())
        return false;
    for (const auto& e : edges_)
        if (!other.adjacent(e.u, e.v))
            return false;
    return true;
}

Graph complement(const Graph& g)
{
    const auto n = g.vertex_count();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 1; u <= n; ++u) {
        auto nb = g.neighbors(u);
        auto it = std::upper_bound(nb.begin(), nb.end(), u);
        for (VertexId v = u + 1; v <= n; ++v) {
            if (it != nb.end() && *it == v) {
                ++it;
                continue;
            }
            pairs.emplace_back(u, v);
        }
    }
    return Graph::from_edge_list(n, pairs);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs)
{
    if (vs.empty())
        throw Error(ErrorCode::EmptyVertexSet, "induced subgraph needs a non-empty vertex set");
    if (vs.capacity() != g.vertex_count())
        throw Error(ErrorCode::InvalidParameter, "vertex set capacity does not match graph");

    InducedSubgraph out;
    out.sub_vertex.assign(g.vertex_count(), 0);
    out.sub_edge.assign(g.edge_count(), 0);
    vs.for_each([&](VertexId v) {
        out.parent_vertex.push_back(v);
        out.sub_vertex[v - 1] = static_cast<VertexId>(out.parent_vertex.size());
    });

    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId e = 1; e <= g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const auto a = out.sub_vertex[ed.u - 1];
        const auto b = out.sub_vertex[ed.v - 1];
        if (a && b) {
            pairs.emplace_back(a, b);
            out.parent_edge.push_back(e);
            out.sub_edge[e - 1] = static_cast<EdgeId>(out.parent_edge.size());
        }
    }
    out.graph = Graph::from_edge_list(out.parent_vertex.size(), pairs);
    return out;
}

SeparabilityReport check_nonseparable(const Graph& g)
{
    SeparabilityReport r;
    const auto n = g.vertex_count();
    if (n == 0)
        return r;

    r.min_degree = g.degree(1);
    for (VertexId v = 2; v <= n; ++v)
        r.min_degree = std::min(r.min_degree, g.degree(v));
    r.min_degree_at_least_3 = r.min_degree >= 3;

    // Iterative low-link DFS over every component.
    std::vector<std::size_t> disc(n + 1, 0), low(n + 1, 0);
    std::vector<bool> is_cut(n + 1, false);
    std::size_t timer = 0, components = 0;

    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
        std::size_t children;
    };
    std::vector<Frame> stack;

    for (VertexId root = 1; root <= n; ++root) {
        if (disc[root])
            continue;
        ++components;
        disc[root] = low[root] = ++timer;
        stack.push_back({root, 0, 0, 0});
        while (!stack.empty()) {
            auto& f = stack.back();
            auto nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                const auto w = nb[f.next];
                const auto eid = *g.edge_between(f.v, w);
                ++f.next;
                if (eid == f.via)
                    continue;
                if (disc[w]) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                } else {
                    ++f.children;
                    disc[w] = low[w] = ++timer;
                    stack.push_back({w, eid, 0, 0});
                }
                continue;
            }
            const Frame done = f;
            stack.pop_back();
            if (stack.empty()) {
                if (done.children > 1)
                    is_cut[done.v] = true;
                continue;
            }
            auto& parent = stack.back();
            low[parent.v] = std::min(low[parent.v], low[done.v]);
            if (low[done.v] > disc[parent.v])
                r.bridges.push_back(done.via);
            if (stack.size() > 1 && low[done.v] >= disc[parent.v])
                is_cut[parent.v] = true;
        }
    }

    for (VertexId v = 1; v <= n; ++v)
        if (is_cut[v])
            r.articulation_points.push_back(v);
    std::sort(r.bridges.begin(), r.bridges.end());
    r.connected = components == 1;
    r.has_bridge = !r.bridges.empty();
    r.has_articulation_point = !r.articulation_points.empty();
    return r;
}

} // namespace triclique
