#pragma once

#include <algorithm>
#include <vector>

#include "h3lab/host.hpp"
#include "h3lab/three_graph.hpp"

namespace h3lab {

enum class SearchStatus : std::uint8_t { found, absent, budget_exceeded };

struct EmbeddingResult {
    SearchStatus status = SearchStatus::absent;
    std::vector<int> map; // pattern vertex -> host vertex
    long long nodes = 0;
};

inline bool verify_embedding(const TripleColoring& host, const ThreeGraph& pattern, Color color,
                             const std::vector<int>& map) {
    if (map.size() != static_cast<std::size_t>(pattern.n)) return false;
    std::vector<int> img = map;
    std::sort(img.begin(), img.end());
    if (std::adjacent_find(img.begin(), img.end()) != img.end()) return false;
    if (!img.empty() && (img.front() < 0 || img.back() >= host.size())) return false;
    for (const auto& e : pattern.edges) {
        Edge t = sorted_edge(map[static_cast<std::size_t>(e[0])],
                             map[static_cast<std::size_t>(e[1])],
                             map[static_cast<std::size_t>(e[2])]);
        if (host.color(t[0], t[1], t[2]) != color) return false;
    }
    return true;
}

/// Exhaustive backtracking search for an injective map under which every
/// pattern edge receives `color`. Pattern vertices are placed in a static
/// order chosen to close edges early; host candidates are tried ascending, so
/// the first witness is the smallest in that fixed branch order.
inline EmbeddingResult find_copy(const TripleColoring& host, const ThreeGraph& pattern, Color color,
                                 long long node_budget = 200'000'000LL) {
    int np = pattern.n;
    int nh = host.size();
    EmbeddingResult res;
    if (np > nh) {
        res.status = SearchStatus::absent;
        return res;
    }

    // Placement order: repeatedly take the vertex closing the most edges
    // against already-placed vertices, ties to higher total degree, then to
    // smaller index.
    std::vector<int> deg(static_cast<std::size_t>(np), 0);
    for (const auto& e : pattern.edges)
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(np), false);
    for (int step = 0; step < np; ++step) {
        int best = -1, best_close = -1, best_deg = -1;
        for (int v = 0; v < np; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int close = 0;
            for (const auto& e : pattern.edges) {
                if (e[0] != v && e[1] != v && e[2] != v) continue;
                int others = 0;
                for (int w : e)
                    if (w != v && placed[static_cast<std::size_t>(w)]) ++others;
                if (others == 2) ++close;
            }
            if (close > best_close || (close == best_close && deg[static_cast<std::size_t>(v)] > best_deg)) {
                best = v;
                best_close = close;
                best_deg = deg[static_cast<std::size_t>(v)];
            }
        }
        placed[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
    }
    // Edges checked at the step placing their last vertex.
    std::vector<int> pos(static_cast<std::size_t>(np));
    for (int i = 0; i < np; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::vector<Edge>> check_at(static_cast<std::size_t>(np));
    for (const auto& e : pattern.edges) {
        int last = std::max({pos[static_cast<std::size_t>(e[0])], pos[static_cast<std::size_t>(e[1])],
                             pos[static_cast<std::size_t>(e[2])]});
        check_at[static_cast<std::size_t>(last)].push_back(e);
    }

    std::vector<int> map(static_cast<std::size_t>(np), -1);
    std::vector<bool> used(static_cast<std::size_t>(nh), false);
    long long nodes = 0;
    bool over_budget = false;

    auto rec = [&](auto&& self, int step) -> bool {
        if (step == np) return true;
        int pv = order[static_cast<std::size_t>(step)];
        for (int hv = 0; hv < nh; ++hv) {
            if (used[static_cast<std::size_t>(hv)]) continue;
            if (++nodes > node_budget) {
                over_budget = true;
                return false;
            }
            map[static_cast<std::size_t>(pv)] = hv;
            used[static_cast<std::size_t>(hv)] = true;
            bool ok = true;
            for (const auto& e : check_at[static_cast<std::size_t>(step)]) {
                Edge t = sorted_edge(map[static_cast<std::size_t>(e[0])],
                                     map[static_cast<std::size_t>(e[1])],
                                     map[static_cast<std::size_t>(e[2])]);
                if (host.color(t[0], t[1], t[2]) != color) { ok = false; break; }
            }
            if (ok && self(self, step + 1)) return true;
            used[static_cast<std::size_t>(hv)] = false;
            map[static_cast<std::size_t>(pv)] = -1;
            if (over_budget) return false;
        }
        return false;
    };

    bool found = rec(rec, 0);
    res.nodes = nodes;
    if (found) {
        res.status = SearchStatus::found;
        res.map = map;
    } else {
        res.status = over_budget ? SearchStatus::budget_exceeded : SearchStatus::absent;
    }
    return res;
}

} // namespace h3lab
