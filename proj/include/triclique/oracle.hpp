#pragma once

#include <vector>

#include "triclique/graph.hpp"

namespace triclique {

inline constexpr std::uint64_t default_node_budget = 10'000'000;
inline constexpr std::size_t default_clause_budget = 30;
inline constexpr std::size_t default_term_budget = 1u << 20;

struct ExactClique {
    VertexSet clique;
    std::size_t omega = 0;
    std::uint64_t nodes = 0;
};

/// Branch and bound with a greedy-colouring bound. Throws BudgetExceeded once
/// more than `node_budget` search nodes have been expanded.
ExactClique max_clique_exact(const Graph& g, std::uint64_t node_budget = default_node_budget);

struct MaximalCliques {
    std::vector<VertexSet> cliques;  // lexicographic order
    std::uint64_t nodes = 0;
};

/// Bron–Kerbosch with Tomita pivoting.
MaximalCliques enumerate_maximal_cliques(const Graph& g, std::uint64_t node_budget = default_node_budget);

/// Conjunction of vertex literals in the product over complement edges.
using ProductTerm = VertexSet;

/// Drops duplicates and every term that contains another; result sorted by size, then lexicographically.
std::vector<ProductTerm> absorb(std::vector<ProductTerm> terms);

struct MaghoutResult {
    std::vector<VertexSet> cliques;  // V minus each cover, lexicographic order
    std::vector<ProductTerm> covers; // minimal vertex covers of the complement
    std::size_t clauses = 0;         // complement edge count
    std::size_t peak_terms = 0;
};

/// Expands the product of (a v b) over the complement's edges, in ascending edge
/// order, absorbing after every clause. Throws BudgetExceeded when the complement
/// has more than `clause_budget` edges or the term set outgrows `term_budget`.
MaghoutResult maghout_cliques(const Graph& g, std::size_t clause_budget = default_clause_budget,
                              std::size_t term_budget = default_term_budget);

} // namespace triclique
