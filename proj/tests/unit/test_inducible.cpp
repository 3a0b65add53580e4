#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "h3lab/canonical.hpp"
#include "h3lab/inducible.hpp"
#include "h3lab/pair_density.hpp"
#include "h3lab/three_graph.hpp"

using namespace h3lab;

namespace {

// Reference: try every vertex ordering and every shadow labeling.
bool inducible_brute(const ThreeGraph& h) {
    auto pairs = shadow(h);
    int P = static_cast<int>(pairs.size());
    std::vector<int> rank(static_cast<std::size_t>(h.n));
    for (int i = 0; i < h.n; ++i) rank[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<int> label(static_cast<std::size_t>(P), 1);
        for (;;) {
            InducibilityWitness w{rank, label};
            if (verify_inducibility(h, w)) return true;
            int i = 0;
            while (i < P && label[static_cast<std::size_t>(i)] == 3) label[static_cast<std::size_t>(i++)] = 1;
            if (i == P) break;
            ++label[static_cast<std::size_t>(i)];
        }
    } while (std::next_permutation(rank.begin(), rank.end()));
    return false;
}

} // namespace

TEST_CASE("inducibility examples") {
    auto r6 = is_123_inducible(tight_cycle(6));
    REQUIRE(r6.status == SearchStatus::found);
    REQUIRE(verify_inducibility(tight_cycle(6), r6.witness));

    auto rl4 = is_123_inducible(link_of_cycle(4));
    REQUIRE(rl4.status == SearchStatus::found);
    REQUIRE(verify_inducibility(link_of_cycle(4), rl4.witness));

    auto b = make_three_graph(4, {{{0, 1, 2}, {0, 1, 3}}});
    auto rb = is_123_inducible(b);
    REQUIRE(rb.status == SearchStatus::found);
    REQUIRE(verify_inducibility(b, rb.witness));

    REQUIRE(is_123_inducible(tight_cycle(5)).status == SearchStatus::absent);
    REQUIRE(is_123_inducible(link_of_cycle(3)).status == SearchStatus::absent);

    // Budget exhaustion is its own outcome.
    REQUIRE(is_123_inducible(tight_cycle(6), 2).status == SearchStatus::budget_exceeded);
}

TEST_CASE("backtracker agrees with the order-and-label brute force") {
    for (const auto& g : enumerate_all(4, 4)) {
        auto r = is_123_inducible(g);
        REQUIRE(r.status != SearchStatus::budget_exceeded);
        REQUIRE((r.status == SearchStatus::found) == inducible_brute(g));
        if (r.status == SearchStatus::found) REQUIRE(verify_inducibility(g, r.witness));
    }
}

TEST_CASE("catalog equivalences: inducible iff density 1/3, avoidable iff at least 1/2") {
    for (const auto& g : enumerate_all(4, 4)) {
        if (g.edges.empty()) continue;
        auto mp = mpair_exact(g);
        auto ind = is_123_inducible(g);
        REQUIRE((ind.status == SearchStatus::found) == (mp.value == Rat(1, 3)));
        REQUIRE(is_avoidable(g).avoidable == !(mp.value < Rat(1, 2)));
    }
}

TEST_CASE("glued link paths are not 123-inducible") {
    auto r = is_123_inducible(glued_link_paths());
    REQUIRE(r.status == SearchStatus::absent);
    REQUIRE(r.nodes > 0);
}
