#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <vector>

#include "h3lab/find_copy.hpp" // SearchStatus
#include "h3lab/pair_density.hpp"
#include "h3lab/three_graph.hpp"

namespace h3lab {

/// Shadow labeling by {1,2,3} plus a vertex ordering: per edge u<v<w the pair
/// uv carries 1, vw carries 2, uw carries 3.
struct InducibilityWitness {
    std::vector<int> rank;       // rank[v] = position in the order
    std::vector<int> pair_label; // per shadow pair index, values 1..3
};

struct InducibilityResult {
    SearchStatus status = SearchStatus::absent; // found = witness, absent = refuted
    InducibilityWitness witness;
    long long nodes = 0;
};

inline bool verify_inducibility(const ThreeGraph& h, const InducibilityWitness& w) {
    auto pairs = shadow(h);
    if (w.pair_label.size() != pairs.size()) return false;
    if (w.rank.size() != static_cast<std::size_t>(h.n)) return false;
    for (const auto& e : h.edges) {
        std::array<int, 3> s = e;
        std::sort(s.begin(), s.end(), [&](int a, int b) {
            return w.rank[static_cast<std::size_t>(a)] < w.rank[static_cast<std::size_t>(b)];
        });
        auto lab = [&](int a, int b) {
            return w.pair_label[static_cast<std::size_t>(detail::pair_index(pairs, a, b))];
        };
        if (lab(s[0], s[1]) != 1 || lab(s[1], s[2]) != 2 || lab(s[0], s[2]) != 3) return false;
    }
    return true;
}

/// Backtracking over per-edge label bijections with propagation through
/// shared pairs, pruning by cycles in the induced precedence relation
/// (label-1&3 vertex precedes label-1&2 precedes label-2&3).
inline InducibilityResult is_123_inducible(const ThreeGraph& h, long long node_budget = 50'000'000LL) {
    InducibilityResult res;
    auto pairs = shadow(h);
    int P = static_cast<int>(pairs.size());
    int m = static_cast<int>(h.edges.size());
    int n = h.n;

    // Pair ids per edge, ascending vertex order within the edge.
    std::vector<std::array<int, 3>> ep(static_cast<std::size_t>(m));
    for (int ei = 0; ei < m; ++ei) {
        const Edge& e = h.edges[static_cast<std::size_t>(ei)];
        ep[static_cast<std::size_t>(ei)] = {detail::pair_index(pairs, e[0], e[1]),
                                            detail::pair_index(pairs, e[1], e[2]),
                                            detail::pair_index(pairs, e[0], e[2])};
    }

    // Edge processing order: breadth-first over shared pairs so that chains
    // of adjacent edges are forced early.
    std::vector<std::vector<int>> edges_of_pair(static_cast<std::size_t>(P));
    for (int ei = 0; ei < m; ++ei)
        for (int pi : ep[static_cast<std::size_t>(ei)]) edges_of_pair[static_cast<std::size_t>(pi)].push_back(ei);
    std::vector<int> order;
    std::vector<bool> queued(static_cast<std::size_t>(m), false);
    for (int root = 0; root < m; ++root) {
        if (queued[static_cast<std::size_t>(root)]) continue;
        std::deque<int> q{root};
        queued[static_cast<std::size_t>(root)] = true;
        while (!q.empty()) {
            int ei = q.front();
            q.pop_front();
            order.push_back(ei);
            for (int pi : ep[static_cast<std::size_t>(ei)])
                for (int nb : edges_of_pair[static_cast<std::size_t>(pi)])
                    if (!queued[static_cast<std::size_t>(nb)]) {
                        queued[static_cast<std::size_t>(nb)] = true;
                        q.push_back(nb);
                    }
        }
    }

    // Strict-order closure: row v is the bitset of vertices known to follow v.
    int words = (n + 63) / 64;
    std::vector<std::uint64_t> reach(static_cast<std::size_t>(n * std::max(words, 1)), 0);
    auto bit = [&](int row, int col) -> bool {
        return (reach[static_cast<std::size_t>(row * words + (col >> 6))] >> (col & 63)) & 1ULL;
    };
    auto add_before = [&](int a, int b) -> bool { // record a < b
        if (bit(b, a)) return false;
        if (bit(a, b)) return true;
        // every x with x <= a (x == a or a in reach[x]) gains reach[b] and b
        for (int x = 0; x < n; ++x) {
            bool covers = (x == a) || bit(x, a);
            if (!covers) continue;
            for (int w = 0; w < words; ++w)
                reach[static_cast<std::size_t>(x * words + w)] |= reach[static_cast<std::size_t>(b * words + w)];
            reach[static_cast<std::size_t>(x * words + (b >> 6))] |= 1ULL << (b & 63);
        }
        return true;
    };

    std::vector<int> label(static_cast<std::size_t>(P), 0);
    // The six bijections: label pattern over (uv, vw, uw) determines the
    // in-edge roles of the ascending vertices a<b<c of the stored edge.
    static const std::array<std::array<int, 3>, 6> kPatterns{{
        {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
    }};

    bool over_budget = false;
    auto rec = [&](auto&& self, std::size_t step) -> bool {
        if (step == order.size()) return true;
        int ei = order[step];
        const Edge& e = h.edges[static_cast<std::size_t>(ei)];
        const auto& pids = ep[static_cast<std::size_t>(ei)]; // labels of (ab, bc, ac) for a<b<c
        for (const auto& pat : kPatterns) {
            if (++res.nodes > node_budget) { over_budget = true; return false; }
            bool compatible = true;
            for (int i = 0; i < 3; ++i) {
                int cur = label[static_cast<std::size_t>(pids[static_cast<std::size_t>(i)])];
                if (cur != 0 && cur != pat[static_cast<std::size_t>(i)]) { compatible = false; break; }
            }
            if (!compatible) continue;
            // Roles: the vertex on pairs {1,3} is least, {1,2} middle, {2,3} greatest.
            auto on = [&](int lbl, int out[2]) {
                int k = 0;
                static const int endpoints[3][2] = {{0, 1}, {1, 2}, {0, 2}};
                for (int i = 0; i < 3; ++i)
                    if (pat[static_cast<std::size_t>(i)] == lbl) {
                        out[0] = e[static_cast<std::size_t>(endpoints[i][0])];
                        out[1] = e[static_cast<std::size_t>(endpoints[i][1])];
                        k = 1;
                    }
                (void)k;
            };
            int p1[2], p2[2], p3[2];
            on(1, p1);
            on(2, p2);
            on(3, p3);
            auto common = [](const int a[2], const int b[2]) {
                if (a[0] == b[0] || a[0] == b[1]) return a[0];
                return a[1];
            };
            int vmin = common(p1, p3);
            int vmid = common(p1, p2);
            int vmax = common(p2, p3);
            std::vector<std::uint64_t> snapshot = reach;
            std::array<int, 3> touched{};
            int set_count = 0;
            bool ok = add_before(vmin, vmid) && add_before(vmid, vmax) && add_before(vmin, vmax);
            if (ok) {
                for (int i = 0; i < 3; ++i) {
                    int pi = pids[static_cast<std::size_t>(i)];
                    if (label[static_cast<std::size_t>(pi)] == 0) {
                        label[static_cast<std::size_t>(pi)] = pat[static_cast<std::size_t>(i)];
                        touched[static_cast<std::size_t>(set_count++)] = pi;
                    }
                }
                if (self(self, step + 1)) return true;
                for (int i = 0; i < set_count; ++i)
                    label[static_cast<std::size_t>(touched[static_cast<std::size_t>(i)])] = 0;
            }
            reach = snapshot;
            if (over_budget) return false;
        }
        return false;
    };

    bool found = rec(rec, 0);
    if (over_budget) {
        res.status = SearchStatus::budget_exceeded;
        return res;
    }
    if (!found) {
        res.status = SearchStatus::absent;
        return res;
    }

    // Topological extension of the precedence relation, smallest vertex first.
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && bit(a, b)) ++indeg[static_cast<std::size_t>(b)];
    std::vector<int> rank(static_cast<std::size_t>(n), 0);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int pos = 0; pos < n; ++pos) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!done[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0) { pick = v; break; }
        done[static_cast<std::size_t>(pick)] = true;
        rank[static_cast<std::size_t>(pick)] = pos;
        for (int b = 0; b < n; ++b)
            if (b != pick && bit(pick, b)) --indeg[static_cast<std::size_t>(b)];
    }

    res.status = SearchStatus::found;
    res.witness.rank = rank;
    res.witness.pair_label = label;
    return res;
}

} // namespace h3lab
