#include "triclique/oracle.hpp"

#include <algorithm>

namespace triclique {
namespace {

std::vector<VertexSet> adjacency_rows(const Graph& g)
{
    std::vector<VertexSet> rows;
    rows.reserve(g.vertex_count());
    for (VertexId v = 1; v <= g.vertex_count(); ++v)
        rows.push_back(g.neighborhood(v));
    return rows;
}

class MaxCliqueSearch {
public:
    MaxCliqueSearch(const Graph& g, std::uint64_t budget)
        : adj_(adjacency_rows(g)), budget_(budget), best_(g.vertex_count())
    {
    }

    ExactClique run(std::size_t n)
    {
        VertexSet r(n);
        expand(r, VertexSet::full(n));
        return {best_, best_.size(), nodes_};
    }

private:
    void expand(VertexSet& r, VertexSet p)
    {
        if (++nodes_ > budget_)
            throw BudgetExceeded("maximum clique search exceeded " + std::to_string(budget_) + " nodes", nodes_);

        // Greedy colouring: vertices in colour class k can extend r by at most k.
        std::vector<VertexId> order;
        std::vector<std::size_t> colour;
        VertexSet uncoloured = p;
        for (std::size_t k = 1; !uncoloured.empty(); ++k) {
            VertexSet q = uncoloured;
            while (!q.empty()) {
                const VertexId v = q.first();
                q.erase(v);
                q -= adj_[v - 1];
                uncoloured.erase(v);
                order.push_back(v);
                colour.push_back(k);
            }
        }

        for (std::size_t i = order.size(); i-- > 0;) {
            if (r.size() + colour[i] <= best_.size())
                return;
            const VertexId v = order[i];
            r.insert(v);
            auto np = p & adj_[v - 1];
            if (np.empty()) {
                if (r.size() > best_.size())
                    best_ = r;
            } else {
                expand(r, std::move(np));
            }
            r.erase(v);
            p.erase(v);
        }
    }

    std::vector<VertexSet> adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    VertexSet best_;
};

class BronKerbosch {
public:
    BronKerbosch(const Graph& g, std::uint64_t budget) : adj_(adjacency_rows(g)), budget_(budget) {}

    MaximalCliques run(std::size_t n)
    {
        VertexSet r(n);
        recurse(r, VertexSet::full(n), VertexSet(n));
        std::sort(found_.begin(), found_.end());
        return {std::move(found_), nodes_};
    }

private:
    void recurse(VertexSet& r, VertexSet p, VertexSet x)
    {
        if (++nodes_ > budget_)
            throw BudgetExceeded("maximal clique enumeration exceeded " + std::to_string(budget_) + " nodes", nodes_);
        if (p.empty()) {
            if (x.empty())
                found_.push_back(r);
            return;
        }

        VertexId pivot = 0;
        std::size_t best = 0;
        (p | x).for_each([&](VertexId u) {
            const auto k = (p & adj_[u - 1]).size();
            if (pivot == 0 || k > best) {
                pivot = u;
                best = k;
            }
        });

        for (VertexId v : (p - adj_[pivot - 1]).labels()) {
            r.insert(v);
            recurse(r, p & adj_[v - 1], x & adj_[v - 1]);
            r.erase(v);
            p.erase(v);
            x.insert(v);
        }
    }

    std::vector<VertexSet> adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<VertexSet> found_;
};

} // namespace

ExactClique max_clique_exact(const Graph& g, std::uint64_t node_budget)
{
    return MaxCliqueSearch(g, node_budget).run(g.vertex_count());
}

MaximalCliques enumerate_maximal_cliques(const Graph& g, std::uint64_t node_budget)
{
    return BronKerbosch(g, node_budget).run(g.vertex_count());
}

std::vector<ProductTerm> absorb(std::vector<ProductTerm> terms)
{
    std::sort(terms.begin(), terms.end(), [](const ProductTerm& a, const ProductTerm& b) {
        const auto sa = a.size(), sb = b.size();
        return sa != sb ? sa < sb : a < b;
    });
    std::vector<ProductTerm> kept;
    for (auto& t : terms) {
        const bool absorbed = std::any_of(kept.begin(), kept.end(), [&](const ProductTerm& k) { return k.is_subset_of(t); });
        if (!absorbed)
            kept.push_back(std::move(t));
    }
    return kept;
}

MaghoutResult maghout_cliques(const Graph& g, std::size_t clause_budget, std::size_t term_budget)
{
    const auto comp = complement(g);
    MaghoutResult out;
    out.clauses = comp.edge_count();
    if (out.clauses > clause_budget)
        throw BudgetExceeded("complement has " + std::to_string(out.clauses) + " clauses, budget is " +
                                 std::to_string(clause_budget),
                             out.clauses);

    const auto n = g.vertex_count();
    std::vector<ProductTerm> terms{ProductTerm(n)};
    out.peak_terms = 1;
    for (const auto& e : comp.edges()) {
        std::vector<ProductTerm> next;
        next.reserve(terms.size() * 2);
        for (const auto& t : terms) {
            if (t.contains(e.u) || t.contains(e.v)) {
                next.push_back(t);
                continue;
            }
            next.push_back(t);
            next.back().insert(e.u);
            next.push_back(t);
            next.back().insert(e.v);
        }
        out.peak_terms = std::max(out.peak_terms, next.size());
        if (next.size() > term_budget)
            throw BudgetExceeded("Maghout expansion exceeded " + std::to_string(term_budget) + " terms", next.size());
        terms = absorb(std::move(next));
    }

    out.covers = std::move(terms);
    const auto all = VertexSet::full(n);
    for (const auto& c : out.covers)
        out.cliques.push_back(all - c);
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

} // namespace triclique
