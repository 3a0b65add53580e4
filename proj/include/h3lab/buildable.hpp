#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "h3lab/three_graph.hpp"

namespace h3lab {

/// Checks that listing the edges in `order` adds at least one new shadow pair
/// at every step.
inline bool verify_build_order(const ThreeGraph& h, const std::vector<int>& order) {
    if (order.size() != h.edges.size()) return false;
    std::vector<int> sorted3 = order;
    std::sort(sorted3.begin(), sorted3.end());
    for (std::size_t i = 0; i < sorted3.size(); ++i)
        if (sorted3[i] != static_cast<int>(i)) return false;
    std::set<std::pair<int, int>> seen;
    for (int ei : order) {
        const Edge& e = h.edges[static_cast<std::size_t>(ei)];
        std::pair<int, int> ps[3] = {{e[0], e[1]}, {e[1], e[2]}, {e[0], e[2]}};
        bool fresh = false;
        for (auto& p : ps) fresh |= !seen.count(p);
        if (!fresh) return false;
        for (auto& p : ps) seen.insert(p);
    }
    return true;
}

/// Edge ordering in which every edge adds a new shadow pair, or absent.
/// Greedy reverse elimination: an edge owning a pair covered by no other edge
/// can always go last, and removing it keeps every other private pair private.
inline std::optional<std::vector<int>> shadow_buildable(const ThreeGraph& h) {
    int m = static_cast<int>(h.edges.size());
    std::map<std::pair<int, int>, int> cover;
    auto pairs_of = [&](int ei) {
        const Edge& e = h.edges[static_cast<std::size_t>(ei)];
        return std::array<std::pair<int, int>, 3>{{{e[0], e[1]}, {e[1], e[2]}, {e[0], e[2]}}};
    };
    for (int i = 0; i < m; ++i)
        for (auto& p : pairs_of(i)) ++cover[p];
    std::vector<bool> alive(static_cast<std::size_t>(m), true);
    std::vector<int> removal;
    for (int step = 0; step < m; ++step) {
        int pick = -1;
        for (int i = 0; i < m && pick < 0; ++i) {
            if (!alive[static_cast<std::size_t>(i)]) continue;
            for (auto& p : pairs_of(i))
                if (cover[p] == 1) { pick = i; break; }
        }
        if (pick < 0) return std::nullopt;
        alive[static_cast<std::size_t>(pick)] = false;
        for (auto& p : pairs_of(pick)) --cover[p];
        removal.push_back(pick);
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

} // namespace h3lab
