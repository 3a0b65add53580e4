#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "h3lab/rng.hpp"
#include "h3lab/three_graph.hpp"

using namespace h3lab;

TEST_CASE("shadow basics") {
    auto single = make_three_graph(3, {{{0, 1, 2}}});
    REQUIRE(shadow(single) == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

    // Enumerating the pairs of the edges {k,k+1,k+2} mod 5 reaches every pair
    // on five vertices.
    std::set<std::pair<int, int>> expect;
    for (int k = 0; k < 5; ++k) {
        int a = k, b = (k + 1) % 5, c = (k + 2) % 5;
        expect.insert({std::min(a, b), std::max(a, b)});
        expect.insert({std::min(b, c), std::max(b, c)});
        expect.insert({std::min(a, c), std::max(a, c)});
    }
    REQUIRE(expect.size() == 10);
    auto sh = shadow(tight_cycle(5));
    REQUIRE(std::set<std::pair<int, int>>(sh.begin(), sh.end()) == expect);

    REQUIRE(shadow(make_three_graph(4, {})).empty());
}

TEST_CASE("linearity") {
    REQUIRE_FALSE(is_linear(make_three_graph(4, {{{0, 1, 2}, {0, 1, 3}}})));
    REQUIRE(is_linear(make_three_graph(5, {{{0, 1, 2}, {2, 3, 4}}})));
    // {0,1,2} and {1,2,3} share the pair {1,2}.
    REQUIRE_FALSE(is_linear(tight_cycle(6)));
    REQUIRE(is_linear(make_three_graph(0, {})));
}

TEST_CASE("validation") {
    REQUIRE_THROWS_AS(make_three_graph(3, {{{0, 1, 3}}}), BadInput);
    REQUIRE_THROWS_AS(make_three_graph(3, {{{0, 1, 1}}}), BadInput);
    REQUIRE_THROWS_AS(make_three_graph(4, {{{0, 1, 2}, {2, 1, 0}}}), BadInput);
    REQUIRE_THROWS_AS(tight_cycle(2), BadInput);
    REQUIRE_THROWS_AS(link_of_cycle(2), BadInput);
    REQUIRE_THROWS_AS(link_of_path(0), BadInput);
    REQUIRE_THROWS_AS(complete(2), BadInput);
}

TEST_CASE("generators") {
    auto c4 = tight_cycle(4);
    auto k4 = complete(4);
    REQUIRE(c4.edges == k4.edges); // both are all four triples on four vertices

    auto c3 = tight_cycle(3);
    REQUIRE(c3.edges.size() == 1);

    auto l3 = link_of_cycle(3);
    REQUIRE(l3.n == 4);
    REQUIRE(l3.edges.size() == 3);

    auto lp = link_of_path(12);
    REQUIRE(lp.n == 13);
    REQUIRE(lp.edges.size() == 11);

    auto g = glued_link_paths();
    REQUIRE(g.n == 18);
    REQUIRE(static_cast<int>(support(g).size()) == 18);
    // Two 11-edge links glued on vertices only: the copies share no edge.
    REQUIRE(g.edges.size() == 22);
    std::set<Edge> first, second;
    for (const auto& e : g.edges) {
        bool has0 = e[0] == 0 || e[1] == 0 || e[2] == 0;
        (has0 ? first : second).insert(e);
    }
    REQUIRE(first.size() == 11);
    REQUIRE(second.size() == 11);
    // Consecutive link edges share an apex pair, so the gluing is not a
    // linear 3-graph even though the two copies are edge-disjoint.
    REQUIRE_FALSE(is_linear(g));
}

TEST_CASE("h3 round trip") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3 + static_cast<int>(rng.below(6));
        std::vector<Edge> es;
        int m = static_cast<int>(rng.below(6));
        for (int i = 0; i < m; ++i) {
            auto s = rng.subset(n, 3);
            es.push_back(Edge{s[0], s[1], s[2]});
        }
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        ThreeGraph g = make_three_graph(n, es, rng.below(2) == 0);
        ThreeGraph back = from_h3_string(to_h3_string(g));
        REQUIRE(back == g);
    }
    REQUIRE_THROWS_AS(from_h3_string("h3 3\n"), BadInput);
    REQUIRE_THROWS_AS(from_h3_string("x3 3 0\n"), BadInput);
    REQUIRE_THROWS_AS(from_h3_string("h3 3 1\n2 1 0\n"), BadInput);
}

TEST_CASE("oriented validation and io") {
    REQUIRE_THROWS_AS(make_oriented(3, {{{0, 1, 2}, {1, 0, 2}}}), BadInput);
    REQUIRE_THROWS_AS(make_oriented(3, {{{0, 0, 1}}}), BadInput);
    auto g = make_oriented(5, {{{3, 0, 4}, {0, 1, 2}}});
    std::ostringstream os;
    write_oh3(os, g);
    std::istringstream is(os.str());
    auto back = parse_oh3(is);
    REQUIRE(back.arcs == g.arcs);
    REQUIRE(back.n == g.n);
}
