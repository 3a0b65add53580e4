#include <catch2/catch_amalgamated.hpp>

#include "h3lab/canonical.hpp"
#include "h3lab/find_copy.hpp"
#include "h3lab/host.hpp"
#include "h3lab/rng.hpp"
#include "h3lab/three_graph.hpp"

using namespace h3lab;

namespace {

// Reference: enumerate every injective map.
bool copy_oracle(const TripleColoring& host, const ThreeGraph& pat, Color color) {
    int np = pat.n, nh = host.size();
    std::vector<int> map(static_cast<std::size_t>(np), -1);
    std::vector<bool> used(static_cast<std::size_t>(nh), false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == np) return verify_embedding(host, pat, color, map);
        for (int h = 0; h < nh; ++h) {
            if (used[static_cast<std::size_t>(h)]) continue;
            used[static_cast<std::size_t>(h)] = true;
            map[static_cast<std::size_t>(v)] = h;
            if (self(self, v + 1)) return true;
            used[static_cast<std::size_t>(h)] = false;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

TEST_CASE("find_copy basics") {
    FnColoring blue_host(6, [](int, int, int) { return Color::blue; });
    auto one = make_three_graph(3, {{{0, 1, 2}}});

    auto r = find_copy(blue_host, one, Color::blue);
    REQUIRE(r.status == SearchStatus::found);
    REQUIRE(r.map == std::vector<int>{0, 1, 2});
    REQUIRE(verify_embedding(blue_host, one, Color::blue, r.map));

    REQUIRE(find_copy(blue_host, one, Color::red).status == SearchStatus::absent);

    // Red exactly on triples through vertex 0 hosts both edges of B at 0.
    FnColoring through0(7, [](int u, int, int) { return u == 0 ? Color::red : Color::blue; });
    auto b = make_three_graph(4, {{{0, 1, 2}, {0, 1, 3}}});
    auto rb = find_copy(through0, b, Color::red);
    REQUIRE(rb.status == SearchStatus::found);
    REQUIRE(verify_embedding(through0, b, Color::red, rb.map));
}

TEST_CASE("budget exhaustion is distinct from absence") {
    FnColoring host(9, [](int u, int v, int w) { return (u + v + w) % 5 == 0 ? Color::red : Color::blue; });
    auto pat = tight_cycle(5);
    auto r = find_copy(host, pat, Color::red, 3);
    REQUIRE(r.status == SearchStatus::budget_exceeded);
}

TEST_CASE("exhaustive search matches full enumeration on small hosts") {
    SplitMix64 rng(23);
    std::vector<ThreeGraph> pats{
        make_three_graph(3, {{{0, 1, 2}}}),
        make_three_graph(4, {{{0, 1, 2}, {0, 1, 3}}}),
        make_three_graph(5, {{{0, 1, 2}, {2, 3, 4}}}),
        tight_cycle(5),
        link_of_cycle(3),
    };
    for (int iter = 0; iter < 6; ++iter) {
        int n = 7 + static_cast<int>(rng.below(3));
        ExplicitColoring host(n);
        for (int w = 2; w < n; ++w)
            for (int v = 1; v < w; ++v)
                for (int u = 0; u < v; ++u)
                    if (rng.below(4) == 0) host.set(u, v, w, Color::red);
        for (const auto& pat : pats) {
            for (Color c : {Color::red, Color::blue}) {
                auto r = find_copy(host, pat, c);
                REQUIRE(r.status != SearchStatus::budget_exceeded);
                REQUIRE((r.status == SearchStatus::found) == copy_oracle(host, pat, c));
                if (r.status == SearchStatus::found)
                    REQUIRE(verify_embedding(host, pat, c, r.map));
            }
        }
    }
}

TEST_CASE("witness choice is deterministic") {
    FnColoring host(8, [](int u, int v, int w) { return ((u * 7 + v * 3 + w) & 1) ? Color::red : Color::blue; });
    auto pat = make_three_graph(4, {{{0, 1, 2}, {1, 2, 3}}});
    auto a = find_copy(host, pat, Color::red);
    auto b = find_copy(host, pat, Color::red);
    REQUIRE(a.status == b.status);
    REQUIRE(a.map == b.map);
    REQUIRE(a.nodes == b.nodes);
}
