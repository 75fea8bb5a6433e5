#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "triclique/errors.hpp"
#include "triclique/index_set.hpp"

namespace triclique {

/// Undirected edge, endpoints stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Immutable simple undirected graph.
 *
 * Vertices are labelled 1..n and edges 1..m, where an edge's label is its
 * position in the construction sequence. Both adjacency (neighbour lists,
 * ascending) and incidence (edge ids per vertex, ascending) views are kept.
 */
class Graph {
public:
    Graph() = default;

    /// Throws Error with VertexOutOfRange, SelfLoop, DuplicateEdge or InvalidParameter (n == 0).
    static Graph from_edge_list(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs);
    static Graph from_edge_list(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& pairs)
    {
        return from_edge_list(n, std::span<const std::pair<VertexId, VertexId>>(pairs));
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const;
    std::span<const Edge> edges() const { return edges_; }

    std::span<const VertexId> neighbors(VertexId v) const;
    std::span<const EdgeId> incident_edges(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const { return edge_between(a, b).has_value(); }

    VertexSet neighborhood(VertexId v) const;
    VertexSet vertex_set() const { return VertexSet::full(n_); }

    /// Same vertex count and same edge set, ignoring edge order.
    bool same_edge_set(const Graph& other) const;

    /// Same vertex count and identical edge sequence.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    // CSR adjacency: neighbours of v are adj_[off_[v-1] .. off_[v]), ascending, with
    // adj_edge_ holding the matching edge ids.
    std::vector<std::size_t> off_;
    std::vector<VertexId> adj_;
    std::vector<EdgeId> adj_edge_;
    // Incidence in ascending edge-id order, same offsets.
    std::vector<EdgeId> inc_;
};

/// All vertex pairs absent from g, in lexicographic order.
Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// Sub label (index + 1) -> parent label.
    std::vector<VertexId> parent_vertex;
    std::vector<EdgeId> parent_edge;
    /// Parent label (index + 1) -> sub label, 0 when absent.
    std::vector<VertexId> sub_vertex;
    std::vector<EdgeId> sub_edge;

    VertexId to_parent(VertexId v) const { return parent_vertex.at(v - 1); }
    EdgeId to_parent_edge(EdgeId e) const { return parent_edge.at(e - 1); }
};

/// Vertices keep their relative order; edges keep the parent's relative order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vs);

struct SeparabilityReport {
    bool connected = false;
    bool has_bridge = false;
    bool has_articulation_point = false;
    bool min_degree_at_least_3 = false;
    std::size_t min_degree = 0;
    std::vector<VertexId> articulation_points;
    std::vector<EdgeId> bridges;

    bool nonseparable() const
    {
        return connected && !has_bridge && !has_articulation_point && min_degree_at_least_3;
    }
};

SeparabilityReport check_nonseparable(const Graph& g);

} // namespace triclique
