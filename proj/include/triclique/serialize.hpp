#pragma once

#include <span>

#include "json.hpp"
#include "triclique/extract.hpp"
#include "triclique/oracle.hpp"

namespace triclique {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const WeightVector& w);
Json to_json(std::span<const Triangle> ts);

/// {i, min, max, surviving, min_edges, removed_ids, weights}
Json to_json(const IterationRecord& r);
/// {mode, main_index, stopped_early, iterations: [...]}
Json to_json(const Trace& t, TraceMode mode);

/// {vertices, size, seed_edges, depth, verified, degenerate, fallback_used, witness_triangles}
Json to_json(const CliqueResult& r);
Json to_json(const PerEdgeCliques& p);

/// {omega, count_maximal, method, nodes_visited}
Json oracle_json(const ExactClique& best, const MaximalCliques& all);
Json oracle_json(const MaghoutResult& m);

/// Inverse of to_json(CliqueResult) for the fields the schema carries.
/// `n` is the vertex count of the graph the result belongs to.
CliqueResult clique_from_json(const Json& j, std::size_t n);

/// Inverse of to_json(IterationRecord); needs the edge and triangle counts.
IterationRecord iteration_from_json(const Json& j, std::size_t edges, std::size_t triangles);

} // namespace triclique
