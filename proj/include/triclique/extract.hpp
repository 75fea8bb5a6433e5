#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "triclique/prune.hpp"

namespace triclique {

struct CliqueResult {
    VertexSet vertices;
    /// Triangles (ids of the input graph) inside the final vertex set that survived
    /// to the iteration the clique was read from.
    std::vector<TriangleId> witness_triangles;
    /// Seed edge of every level, mapped back to input-graph edge ids.
    std::vector<EdgeId> seed_edges;
    bool verified = false;
    std::size_t depth = 0;
    bool degenerate = false;     // graph had no triangles
    bool fallback_used = false;  // a level had to drop a vertex to make progress
    std::optional<std::size_t> main_iteration;  // of the top-level trace
    OpCounters counters;

    std::size_t size() const { return vertices.size(); }
};

struct EdgeSubgraph {
    VertexSet vertices;     // H
    TriangleSet triangles;  // members of C lying inside H
};

/// H = vertices of the triangles of C through e. Throws ZeroWeightEdge if there are none.
EdgeSubgraph subgraph_for_edge(const TriangleIndex& index, const TriangleSet& surviving, EdgeId e);

/// True when every pair in vs is adjacent. The empty set counts as a clique.
bool is_clique(const Graph& g, const VertexSet& vs);

struct ExtractOptions {
    TraceMode mode = TraceMode::Exhaustive;
    bool differential = false;
    /// Top-level seed; must lie on a triangle of the main iteration. Deeper levels
    /// always take the lowest-id edge of minimum weight.
    std::optional<EdgeId> seed_edge;
};

CliqueResult extract_max_clique(const Graph& g, const ExtractOptions& options = {});

struct PerEdgeCliques {
    std::optional<std::size_t> main_index;
    std::uint32_t min_weight = 0;
    std::vector<std::pair<EdgeId, CliqueResult>> by_edge;  // ascending edge id
    std::vector<VertexSet> distinct;                       // first appearance order
};

/// One extraction per minimum-weight edge of the main iteration.
PerEdgeCliques cliques_per_min_edge(const Graph& g, const ExtractOptions& options = {});

} // namespace triclique
