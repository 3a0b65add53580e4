#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "h3lab/canonical.hpp"
#include "h3lab/rng.hpp"
#include "h3lab/three_graph.hpp"

using namespace h3lab;

namespace {

// Canonical form by minimizing over every permutation, with no invariant
// pruning; the reference the class-based search must match.
std::vector<std::uint8_t> canon_brute(const ThreeGraph& h) {
    std::vector<int> perm(static_cast<std::size_t>(h.n));
    for (int i = 0; i < h.n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::vector<Edge> best;
    bool have = false;
    do {
        std::vector<Edge> es;
        for (const auto& e : h.edges)
            es.push_back(sorted_edge(perm[static_cast<std::size_t>(e[0])],
                                     perm[static_cast<std::size_t>(e[1])],
                                     perm[static_cast<std::size_t>(e[2])]));
        std::sort(es.begin(), es.end());
        if (!have || es < best) {
            best = es;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(h.n));
    out.push_back(static_cast<std::uint8_t>(best.size()));
    for (const auto& e : best)
        for (int v : e) out.push_back(static_cast<std::uint8_t>(v));
    return out;
}

} // namespace

TEST_CASE("canonical form examples") {
    REQUIRE(canonical_form(complete(4)) == canonical_form(tight_cycle(4)));
    REQUIRE(canonical_form(make_three_graph(4, {{{0, 1, 2}}})) ==
            canonical_form(make_three_graph(4, {{{1, 2, 3}}})));
    REQUIRE(canonical_form(make_three_graph(5, {{{0, 1, 2}, {0, 1, 3}}})) !=
            canonical_form(make_three_graph(5, {{{0, 1, 2}, {2, 3, 4}}})));
    REQUIRE_THROWS_AS(canonical_form(glued_link_paths()), SizeLimit);
}

TEST_CASE("canonical form separates classes exactly like the unpruned minimum") {
    // Byte values may differ from the all-permutations reference; what must
    // agree is the induced equivalence.
    auto pool = enumerate_all(5, 3);
    SplitMix64 rng(11);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 4 + static_cast<int>(rng.below(2));
        std::vector<Edge> es;
        for (int i = 0; i < 4; ++i) {
            auto s = rng.subset(n, 3);
            es.push_back(Edge{s[0], s[1], s[2]});
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        pool.push_back(make_three_graph(n, es));
    }
    for (const auto& a : pool)
        for (const auto& b : pool) {
            if (a.n != b.n) continue;
            REQUIRE((canonical_form(a) == canonical_form(b)) == (canon_brute(a) == canon_brute(b)));
        }
}

TEST_CASE("canonical form is invariant under random relabelings") {
    SplitMix64 rng(5);
    std::vector<ThreeGraph> pool{tight_cycle(5), tight_cycle(6), link_of_cycle(4), complete(5)};
    for (const auto& g : pool) {
        auto base = canonical_form(g);
        for (int iter = 0; iter < 10; ++iter) {
            std::vector<int> perm(static_cast<std::size_t>(g.n));
            for (int i = 0; i < g.n; ++i) perm[static_cast<std::size_t>(i)] = i;
            for (int i = g.n - 1; i > 0; --i)
                std::swap(perm[static_cast<std::size_t>(i)],
                          perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
            REQUIRE(canonical_form(relabel(g, perm)) == base);
        }
    }
}

TEST_CASE("automorphisms") {
    // Tight cycle of length 5: dihedral symmetry of order 10.
    REQUIRE(automorphisms(tight_cycle(5)).size() == 10);
    REQUIRE(automorphisms(complete(4)).size() == 24);
    REQUIRE(automorphisms(make_three_graph(3, {{{0, 1, 2}}})).size() == 6);
}

TEST_CASE("catalog enumeration") {
    auto cat = enumerate_all(5, 4);
    std::set<std::vector<std::uint8_t>> forms;
    for (const auto& g : cat) {
        REQUIRE(static_cast<int>(g.edges.size()) <= 4);
        if (g.n > 0) {
            REQUIRE(static_cast<int>(support(g).size()) == g.n);
            forms.insert(canonical_form(g));
        }
    }
    REQUIRE(forms.size() == cat.size() - 1); // pairwise non-isomorphic
    // Exactly one single-edge class, one class for two edges sharing a pair.
    int singles = 0;
    for (const auto& g : cat)
        if (g.edges.size() == 1) ++singles;
    REQUIRE(singles == 1);
    REQUIRE_THROWS_AS(enumerate_all(8, 2), SizeLimit);
}
