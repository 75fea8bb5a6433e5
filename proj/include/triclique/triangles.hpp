#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "triclique/graph.hpp"

namespace triclique {

/// A 3-cycle. Vertices and edges are each held in ascending order; `id` is the
/// 1-based position in enumeration order.
struct Triangle {
    TriangleId id = 0;
    std::array<VertexId, 3> vertices{};
    std::array<EdgeId, 3> edges{};

    bool contains_edge(EdgeId e) const { return edges[0] == e || edges[1] == e || edges[2] == e; }
    bool contains_vertex(VertexId v) const { return vertices[0] == v || vertices[1] == v || vertices[2] == v; }
};

/// Every triangle once, ordered by ascending vertex triple.
std::vector<Triangle> enumerate_triangles(const Graph& g);

enum class WeightKind { PerEdge, PerVertex };

/// counts[i] belongs to label i + 1.
struct WeightVector {
    WeightKind kind = WeightKind::PerEdge;
    std::vector<std::uint32_t> counts;

    std::uint32_t at(std::uint32_t label) const { return counts.at(label - 1); }
    std::size_t size() const { return counts.size(); }
    std::uint64_t total() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

WeightVector edge_weight_vector(const Graph& g, std::span<const Triangle> ts);
WeightVector vertex_weight_vector(const Graph& g, std::span<const Triangle> ts);

struct MinMax {
    std::uint32_t min = 0;  // smallest positive count, 0 if none
    std::uint32_t max = 0;
    bool all_zero = true;

    friend bool operator==(const MinMax&, const MinMax&) = default;
};

MinMax min_max(const WeightVector& w);

EdgeSet triangle_edge_set(const Graph& g, const Triangle& t);

/// XOR of the triangles' edge sets.
EdgeSet ring_sum(const Graph& g, std::span<const Triangle> ts);

/**
 * Triangles of one graph plus the reverse map edge -> triangles through it.
 * Keeps its own copy of the graph so it can outlive the caller's.
 */
class TriangleIndex {
public:
    explicit TriangleIndex(Graph g);

    const Graph& graph() const { return graph_; }
    std::span<const Triangle> triangles() const { return triangles_; }
    std::size_t size() const { return triangles_.size(); }
    const Triangle& triangle(TriangleId id) const;

    /// Ascending triangle ids through edge e.
    std::span<const TriangleId> through_edge(EdgeId e) const;

    TriangleSet all() const { return TriangleSet::full(triangles_.size()); }
    TriangleSet none() const { return TriangleSet(triangles_.size()); }

    /// Triangle on three given vertices, in any order.
    std::optional<TriangleId> find(VertexId a, VertexId b, VertexId c) const;

    /// Per-edge counts restricted to the triangles in `subset`.
    WeightVector edge_weights(const TriangleSet& subset) const;

private:
    Graph graph_;
    std::vector<Triangle> triangles_;
    std::vector<std::size_t> edge_off_;
    std::vector<TriangleId> edge_tri_;
};

} // namespace triclique
