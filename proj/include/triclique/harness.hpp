#pragma once

#include <functional>
#include <vector>

#include "triclique/extract.hpp"
#include "triclique/oracle.hpp"

namespace triclique {

struct CorpusSpec {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// `count` specs cycling n over min_n..max_n and p over `densities`, seeds base_seed, base_seed + 1, ...
std::vector<CorpusSpec> corpus_specs(std::size_t count, std::uint64_t base_seed, std::size_t min_n = 4,
                                     std::size_t max_n = 24, std::vector<double> densities = {0.3, 0.5, 0.7});

/// Heuristic against the exact oracle on one graph.
struct GraphCheck {
    std::size_t heuristic_size = 0;
    std::size_t omega = 0;
    bool oracle_ran = false;
    bool heuristic_is_clique = false;
    bool within_omega = false;
    bool agrees = false;
    bool differential_matches = false;  // incremental P_i equals recount on every iteration
    bool fallback_used = false;
};

GraphCheck check_graph(const Graph& g, std::uint64_t node_budget = default_node_budget);

/// True when both trace variants produce identical records.
bool differential_agrees(const Graph& g);

struct AgreementReport {
    std::size_t graphs = 0;
    std::size_t oracle_skipped = 0;
    std::size_t not_clique = 0;
    std::size_t exceeds_omega = 0;
    std::size_t agreements = 0;
    std::size_t differential_mismatches = 0;
    std::size_t fallbacks = 0;
    /// Per-density agreement counts, keyed like `densities`.
    std::vector<std::pair<double, std::pair<std::size_t, std::size_t>>> by_density;

    double agreement_rate() const
    {
        const auto ran = graphs - oracle_skipped;
        return ran ? static_cast<double>(agreements) / static_cast<double>(ran) : 0.0;
    }
};

AgreementReport compare_on_corpus(const std::vector<CorpusSpec>& specs,
                                  std::uint64_t node_budget = default_node_budget,
                                  const std::function<void(const CorpusSpec&, const GraphCheck&)>& on_graph = {});

} // namespace triclique
