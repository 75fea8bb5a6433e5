#pragma once

#include <cstdint>
#include <vector>

#include "triclique/graph.hpp"

namespace triclique {

/// K_n with edges in lexicographic order.
Graph complete(std::size_t n);

/// Moon–Moser graph on 3k vertices: triads {1,2,3}, {4,5,6}, ... are independent,
/// every cross-triad pair is an edge.
Graph moon_moser(std::size_t triads);

/// Complete multipartite graph. Vertices are numbered consecutively by part,
/// edges join every pair from distinct parts, lexicographic order.
Graph complete_multipartite(const std::vector<std::size_t>& parts);

/// Erdős–Rényi G(n, p). Each pair (u < v), in lexicographic order, is kept when
/// the top 53 bits of the next mt19937_64 draw, read as a fraction, fall below p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

} // namespace triclique
