#pragma once

#include <vector>

#include "triclique/graph.hpp"

namespace triclique::test {

inline Graph make(std::size_t n, std::vector<std::pair<VertexId, VertexId>> pairs)
{
    return Graph::from_edge_list(n, pairs);
}

inline VertexSet vs(std::size_t n, std::initializer_list<std::uint32_t> labels)
{
    return VertexSet(n, labels);
}

inline std::vector<std::uint32_t> L(std::initializer_list<std::uint32_t> xs)
{
    return xs;
}

inline Graph cycle(std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 1; v < n; ++v)
        pairs.emplace_back(v, v + 1);
    pairs.emplace_back(1, static_cast<VertexId>(n));
    return Graph::from_edge_list(n, pairs);
}

} // namespace triclique::test
