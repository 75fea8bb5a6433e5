#include "triclique/generators.hpp"

#include <random>

namespace triclique {

Graph complete(std::size_t n)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidParameter, "complete graph needs n >= 1");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v)
            pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

Graph moon_moser(std::size_t triads)
{
    if (triads == 0)
        throw Error(ErrorCode::InvalidParameter, "Moon-Moser graph needs at least one triad");
    const auto n = 3 * triads;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(n * (n - 3) / 2);
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v)
            if ((u - 1) / 3 != (v - 1) / 3)
                pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

Graph complete_multipartite(const std::vector<std::size_t>& parts)
{
    if (parts.size() < 2)
        throw Error(ErrorCode::InvalidParameter, "multipartite graph needs at least two parts");

    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] == 0)
            throw Error(ErrorCode::InvalidParameter, "every part needs at least one vertex");
        part_of.insert(part_of.end(), parts[p], p);
    }

    const auto n = part_of.size();
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v)
            if (part_of[u - 1] != part_of[v - 1])
                pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed)
{
    if (n == 0)
        throw Error(ErrorCode::InvalidParameter, "random graph needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw Error(ErrorCode::InvalidParameter, "edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 1; u <= n; ++u)
        for (VertexId v = u + 1; v <= n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

} // namespace triclique
