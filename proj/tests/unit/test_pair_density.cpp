#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "h3lab/canonical.hpp"
#include "h3lab/pair_density.hpp"
#include "h3lab/rng.hpp"
#include "h3lab/three_graph.hpp"

using namespace h3lab;

namespace {

// Unpruned reference: enumerate every nonempty arc subset.
Rat max_subdensity_brute(const std::vector<std::array<int, 3>>& arcs) {
    Rat best(0, 1);
    auto rec = [&](auto&& self, std::size_t i, int a, std::uint64_t lo, std::uint64_t hi) -> void {
        if (i == arcs.size()) {
            if (a > 0) {
                Rat r(a, __builtin_popcountll(lo) + __builtin_popcountll(hi));
                if (best < r) best = r;
            }
            return;
        }
        std::uint64_t alo = lo, ahi = hi;
        for (int b : arcs[i]) (b < 64 ? alo : ahi) |= 1ULL << (b & 63);
        self(self, i + 1, a + 1, alo, ahi);
        self(self, i + 1, a, lo, hi);
    };
    rec(rec, 0, 0, 0, 0);
    return best;
}

} // namespace

TEST_CASE("max_subdensity examples") {
    // Single edge, injective blocks: one arc on three blocks.
    REQUIRE(max_subdensity({{{0, 1, 2}}}) == Rat(1, 3));

    // Two disjoint edges mapped onto one ordered block triple.
    auto two = make_three_graph(6, {{{0, 1, 2}, {3, 4, 5}}});
    PairPartition p;
    p.base = two;
    p.rank = identity_rank(6);
    p.pairs = shadow(two);
    p.block = {0, 2, 1, 0, 2, 1}; // pairs sorted: 01,02,12,34,35,45
    auto arcs = induced_arcs(p);
    REQUIRE(arcs.size() == 1);
    REQUIRE(max_subdensity(arcs) == Rat(1, 3));

    // Injective partition of the tight 5-cycle: 5 arcs over 10 blocks, and no
    // subset does better.
    auto inj = injective_partition(tight_cycle(5), identity_rank(5));
    auto arcs5 = induced_arcs(inj);
    REQUIRE(max_subdensity(arcs5) == Rat(1, 2));
    REQUIRE(max_subdensity_brute(arcs5) == Rat(1, 2));
}

TEST_CASE("max_subdensity agrees with unpruned enumeration") {
    SplitMix64 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        int nblocks = 4 + static_cast<int>(rng.below(5));
        int narcs = 1 + static_cast<int>(rng.below(7));
        std::set<Edge> sups;
        std::vector<std::array<int, 3>> arcs;
        int guard = 0;
        while (static_cast<int>(arcs.size()) < narcs && ++guard < 100) {
            auto s = rng.subset(nblocks, 3);
            Edge key{s[0], s[1], s[2]};
            if (!sups.insert(key).second) continue;
            std::array<int, 3> a{s[0], s[1], s[2]};
            if (rng.below(2)) std::swap(a[0], a[2]);
            arcs.push_back(a);
        }
        REQUIRE(max_subdensity(arcs) == max_subdensity_brute(arcs));
    }
}

TEST_CASE("check_pair_homomorphism validation") {
    auto one = make_three_graph(3, {{{0, 1, 2}}});
    // Two pairs of a single edge in one block.
    REQUIRE_THROWS_AS(check_pair_homomorphism(one, identity_rank(3), {0, 0, 1}), InvalidHomomorphism);
    REQUIRE(check_pair_homomorphism(one, identity_rank(3), {0, 1, 2}) == Rat(1, 3));

    // Permutation clash between two edges on the same block support.
    auto b = make_three_graph(4, {{{0, 1, 2}, {0, 1, 3}}});
    // pairs sorted: 01,02,03,12,13
    REQUIRE_THROWS_WITH(check_pair_homomorphism(b, identity_rank(4), {0, 2, 1, 1, 2}),
                        Catch::Matchers::ContainsSubstring("permutation"));

    auto inj = injective_partition(tight_cycle(5), identity_rank(5));
    REQUIRE(check_pair_homomorphism(inj.base, inj.rank, inj.block) == Rat(1, 2));
}

TEST_CASE("glued link paths: iterative witness certifies density below 1/2") {
    auto g = glued_link_paths();
    // The witness from the gluing argument assigns every shadow pair its own
    // block: each next edge contributes one arc and at least two new blocks.
    auto inj = injective_partition(g, identity_rank(18));
    Rat val = check_pair_homomorphism(g, inj.rank, inj.block);
    REQUIRE(val < Rat(1, 2));
    REQUIRE(val == Rat(11, 23));
    REQUIRE(max_subdensity_brute(induced_arcs(inj)) == Rat(11, 23));
    // The full minimization is out of range here by design.
    REQUIRE_THROWS_AS(mpair_exact(g), SizeLimit);
}

TEST_CASE("mpair oracle values") {
    REQUIRE(mpair_exact(make_three_graph(3, {{{0, 1, 2}}})).value == Rat(1, 3));
    REQUIRE(mpair_exact(tight_cycle(5)).value == Rat(1, 2));
    REQUIRE(mpair_exact(tight_cycle(6)).value == Rat(1, 3));
    REQUIRE(mpair_exact(link_of_cycle(3)).value == Rat(1, 2));
    REQUIRE_THROWS_AS(mpair_exact(make_three_graph(4, {})), BadInput);
}

TEST_CASE("mpair witnesses replay and bound the minimum") {
    for (const auto& h : {tight_cycle(5), tight_cycle(6), link_of_cycle(4),
                          make_three_graph(4, {{{0, 1, 2}, {0, 1, 3}}})}) {
        auto r = mpair_exact(h);
        REQUIRE(check_pair_homomorphism(h, r.witness.rank, r.witness.block) == r.value);
        auto inj = injective_partition(h, identity_rank(h.n));
        REQUIRE(r.value <= check_pair_homomorphism(h, inj.rank, inj.block));
        REQUIRE(Rat(1, 3) <= r.value);
    }
}

TEST_CASE("symmetry quotient does not change values") {
    MpairOptions raw;
    raw.quotient_symmetries = false;
    for (const auto& h : {tight_cycle(5), link_of_cycle(3),
                          make_three_graph(5, {{{0, 1, 2}, {2, 3, 4}}}),
                          make_three_graph(4, {{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}})}) {
        auto quotiented = mpair_exact(h);
        auto full = mpair_exact(h, OrderingMode::all, raw);
        REQUIRE(quotiented.value == full.value);
    }
}

TEST_CASE("mpair is isomorphism-invariant") {
    SplitMix64 rng(17);
    for (const auto& h : {tight_cycle(5), tight_cycle(6), link_of_cycle(3)}) {
        Rat base = mpair_exact(h).value;
        for (int iter = 0; iter < 3; ++iter) {
            std::vector<int> perm(static_cast<std::size_t>(h.n));
            for (int i = 0; i < h.n; ++i) perm[static_cast<std::size_t>(i)] = i;
            for (int i = h.n - 1; i > 0; --i)
                std::swap(perm[static_cast<std::size_t>(i)],
                          perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
            REQUIRE(mpair_exact(relabel(h, perm)).value == base);
        }
    }
}

TEST_CASE("multithreaded minimization matches single-threaded") {
    MpairOptions mt;
    mt.threads = 4;
    for (const auto& h : {tight_cycle(5), tight_cycle(6), link_of_cycle(3)})
        REQUIRE(mpair_exact(h, OrderingMode::all, mt).value == mpair_exact(h).value);
}

TEST_CASE("avoidability examples") {
    REQUIRE(is_avoidable(tight_cycle(5)).avoidable);

    auto r6 = is_avoidable(tight_cycle(6));
    REQUIRE_FALSE(r6.avoidable);
    REQUIRE(r6.refutation.has_value());
    // The refutation image must itself be Berge-acyclic.
    auto arcs = induced_arcs(*r6.refutation);
    std::vector<Edge> image_edges;
    int maxb = 0;
    for (const auto& a : arcs) {
        image_edges.push_back(sorted_edge(a[0], a[1], a[2]));
        maxb = std::max({maxb, a[0], a[1], a[2]});
    }
    REQUIRE(berge_acyclic(make_three_graph(maxb + 1, image_edges)));

    REQUIRE_FALSE(is_avoidable(make_three_graph(3, {{{0, 1, 2}}})).avoidable);
    REQUIRE_FALSE(is_avoidable(make_three_graph(4, {})).avoidable);
}

TEST_CASE("both avoidability routes agree on the small catalog") {
    // is_avoidable cross-checks the Berge-image search against the density
    // threshold internally and throws on any disagreement.
    for (const auto& g : enumerate_all(4, 4)) {
        if (g.edges.empty()) continue;
        auto r = is_avoidable(g);
        REQUIRE(r.avoidable == !(r.mpair < Rat(1, 2)));
    }
}
