#include "triclique/harness.hpp"

#include <algorithm>

#include "triclique/generators.hpp"

namespace triclique {

std::vector<CorpusSpec> corpus_specs(std::size_t count, std::uint64_t base_seed, std::size_t min_n, std::size_t max_n,
                                     std::vector<double> densities)
{
    if (min_n == 0 || max_n < min_n || densities.empty())
        throw Error(ErrorCode::InvalidParameter, "corpus needs 1 <= min_n <= max_n and at least one density");
    std::vector<CorpusSpec> out;
    out.reserve(count);
    const auto span = max_n - min_n + 1;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back({min_n + i % span, densities[i % densities.size()], base_seed + i});
    return out;
}

bool differential_agrees(const Graph& g)
{
    TriangleIndex index(g);
    const auto a = full_trace(index, {TraceMode::Exhaustive, false});
    const auto b = full_trace(index, {TraceMode::Exhaustive, true});
    if (a.iterations.size() != b.iterations.size() || a.main_index != b.main_index)
        return false;
    for (std::size_t i = 0; i < a.iterations.size(); ++i) {
        const auto& x = a.iterations[i];
        const auto& y = b.iterations[i];
        if (!(x.weights == y.weights) || !(x.surviving == y.surviving) || !(x.removed == y.removed) ||
            x.min != y.min || x.max != y.max || x.min_edges != y.min_edges)
            return false;
        // Both must also equal a recount from the surviving set.
        if (!(index.edge_weights(x.surviving) == y.weights))
            return false;
    }
    return true;
}

GraphCheck check_graph(const Graph& g, std::uint64_t node_budget)
{
    GraphCheck c;
    const auto r = extract_max_clique(g);
    c.heuristic_size = r.size();
    c.heuristic_is_clique = r.verified && is_clique(g, r.vertices);
    c.fallback_used = r.fallback_used;
    c.differential_matches = differential_agrees(g);
    try {
        const auto exact = max_clique_exact(g, node_budget);
        c.omega = exact.omega;
        c.oracle_ran = true;
        c.within_omega = c.heuristic_size <= c.omega;
        c.agrees = c.heuristic_size == c.omega;
    } catch (const BudgetExceeded&) {
        c.oracle_ran = false;
    }
    return c;
}

AgreementReport compare_on_corpus(const std::vector<CorpusSpec>& specs, std::uint64_t node_budget,
                                  const std::function<void(const CorpusSpec&, const GraphCheck&)>& on_graph)
{
    AgreementReport rep;
    for (const auto& s : specs) {
        const auto g = gnp(s.n, s.p, s.seed);
        const auto c = check_graph(g, node_budget);
        ++rep.graphs;
        rep.not_clique += !c.heuristic_is_clique;
        rep.differential_mismatches += !c.differential_matches;
        rep.fallbacks += c.fallback_used;

        auto slot = std::find_if(rep.by_density.begin(), rep.by_density.end(), [&](const auto& d) { return d.first == s.p; });
        if (slot == rep.by_density.end()) {
            rep.by_density.push_back({s.p, {0, 0}});
            slot = rep.by_density.end() - 1;
        }
        if (!c.oracle_ran) {
            ++rep.oracle_skipped;
        } else {
            rep.exceeds_omega += !c.within_omega;
            rep.agreements += c.agrees;
            slot->second.first += c.agrees;
            ++slot->second.second;
        }
        if (on_graph)
            on_graph(s, c);
    }
    return rep;
}

} // namespace triclique
