#include "doctest.h"
#include "helpers.hpp"
#include "triclique/generators.hpp"
#include "triclique/harness.hpp"

using namespace triclique;
using namespace triclique::test;

TEST_CASE("random corpus: soundness, bound, witnesses, weight reconstruction")
{
    std::size_t checked = 0;
    for (const auto& s : corpus_specs(1000, 1)) {
        CAPTURE(s.n);
        CAPTURE(s.p);
        CAPTURE(s.seed);
        const auto g = gnp(s.n, s.p, s.seed);
        const auto r = extract_max_clique(g);
        REQUIRE(r.verified);
        REQUIRE(is_clique(g, r.vertices));
        REQUIRE(r.size() <= max_clique_exact(g).omega);
        REQUIRE(differential_agrees(g));
        if (!r.degenerate) {
            const auto l = r.size();
            CHECK(r.witness_triangles.size() == l * (l - 1) * (l - 2) / 6);
            CHECK(r.depth < g.vertex_count());
        }
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("every edge of an L-clique lies on L - 2 of its triangles")
{
    for (const auto& s : corpus_specs(200, 5000)) {
        const auto g = gnp(s.n, s.p, s.seed);
        TriangleIndex idx(g);
        for (const auto& q : enumerate_maximal_cliques(g).cliques) {
            const auto l = q.size();
            const auto labels = q.labels();
            for (std::size_t a = 0; a < labels.size(); ++a)
                for (std::size_t b = a + 1; b < labels.size(); ++b) {
                    const auto e = *g.edge_between(labels[a], labels[b]);
                    std::size_t inside = 0;
                    for (TriangleId t : idx.through_edge(e)) {
                        const auto& vs = idx.triangle(t).vertices;
                        inside += q.contains(vs[0]) && q.contains(vs[1]) && q.contains(vs[2]);
                    }
                    CHECK(inside == l - 2);
                }
        }
    }
}

TEST_CASE("oracle cross-agreement on small graphs")
{
    for (const auto& s : corpus_specs(300, 9000, 3, 12, {0.3, 0.5, 0.7, 0.9})) {
        const auto g = gnp(s.n, s.p, s.seed);
        const auto bk = enumerate_maximal_cliques(g);
        std::size_t omega = 0;
        for (const auto& c : bk.cliques) {
            omega = std::max(omega, c.size());
            CHECK(is_clique(g, c));
        }
        CHECK(max_clique_exact(g).omega == omega);
        if (complement(g).edge_count() <= default_clause_budget)
            CHECK(maghout_cliques(g).cliques == bk.cliques);
    }
}

TEST_CASE("corpus specs")
{
    const auto specs = corpus_specs(6, 10, 4, 5, {0.3, 0.5, 0.7});
    CHECK(specs[0].n == 4);
    CHECK(specs[1].n == 5);
    CHECK(specs[2].n == 4);
    CHECK(specs[1].p == 0.5);
    CHECK(specs[5].seed == 15);
    CHECK_THROWS_AS(corpus_specs(1, 1, 0, 5), Error);
    CHECK_THROWS_AS(corpus_specs(1, 1, 6, 5), Error);
    CHECK_THROWS_AS(corpus_specs(1, 1, 4, 5, {}), Error);
}
