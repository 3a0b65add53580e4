#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "h3lab/three_graph.hpp"

namespace h3lab {

/// Alternating witness: distinct vertices v_1..v_t and distinct edges e_1..e_t
/// with {v_i, v_{i+1}} contained in e_i, indices cyclic, t >= 2.
struct BergeCycle {
    std::vector<int> vertices;
    std::vector<int> edge_indices; // into ThreeGraph::edges
};

inline bool verify_berge_cycle(const ThreeGraph& g, const BergeCycle& c) {
    std::size_t t = c.vertices.size();
    if (t < 2 || c.edge_indices.size() != t) return false;
    auto vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    auto es = c.edge_indices;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    for (std::size_t i = 0; i < t; ++i) {
        int ei = c.edge_indices[i];
        if (ei < 0 || ei >= static_cast<int>(g.edges.size())) return false;
        const Edge& e = g.edges[static_cast<std::size_t>(ei)];
        int a = c.vertices[i], b = c.vertices[(i + 1) % t];
        auto in = [&](int x) { return x == e[0] || x == e[1] || x == e[2]; };
        if (!in(a) || !in(b)) return false;
    }
    return true;
}

namespace detail {

// Union-find without path compression so operations can be undone; enough for
// the incremental image checks in the partition search.
class RollbackDsu {
public:
    explicit RollbackDsu(int n) : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)]) std::swap(a, b);
        log_.push_back({b, rank_[static_cast<std::size_t>(a)]});
        parent_[static_cast<std::size_t>(b)] = a;
        if (rank_[static_cast<std::size_t>(a)] == rank_[static_cast<std::size_t>(b)]) ++rank_[static_cast<std::size_t>(a)];
        return true;
    }
    std::size_t mark() const { return log_.size(); }
    void rollback(std::size_t m) {
        while (log_.size() > m) {
            auto [child, r] = log_.back();
            log_.pop_back();
            int p = parent_[static_cast<std::size_t>(child)];
            rank_[static_cast<std::size_t>(p)] = r;
            parent_[static_cast<std::size_t>(child)] = child;
        }
    }

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<std::pair<int, int>> log_;
};

} // namespace detail

/// Fast acyclicity test: the incidence graph (vertices vs edges) is a forest
/// iff the hypergraph has no Berge cycle. Adding edge {a,b,c} creates a cycle
/// exactly when two of a,b,c are already connected.
inline bool berge_acyclic(const ThreeGraph& g) {
    detail::RollbackDsu dsu(g.n);
    for (const auto& e : g.edges) {
        int ra = dsu.find(e[0]), rb = dsu.find(e[1]), rc = dsu.find(e[2]);
        if (ra == rb || rb == rc || ra == rc) return false;
        dsu.unite(e[0], e[1]);
        dsu.unite(e[1], e[2]);
    }
    return true;
}

/// Shortest Berge cycle, or absent. Searches the bipartite incidence graph by
/// BFS from every vertex; ties between equal-length cycles are broken by the
/// lexicographically least edge-index sequence (after canonical rotation).
inline std::optional<BergeCycle> berge_cycle(const ThreeGraph& g) {
    int n = g.n;
    int m = static_cast<int>(g.edges.size());
    int total = n + m;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    for (int j = 0; j < m; ++j) {
        const Edge& e = g.edges[static_cast<std::size_t>(j)];
        for (int v : e) {
            adj[static_cast<std::size_t>(v)].push_back(n + j);
            adj[static_cast<std::size_t>(n + j)].push_back(v);
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    auto canonical = [&](BergeCycle c) {
        // Minimize the edge-index sequence over rotations and the two
        // traversal directions; rotate vertices in step.
        std::size_t t = c.edge_indices.size();
        BergeCycle best = c;
        auto consider = [&](const BergeCycle& cand) {
            if (cand.edge_indices < best.edge_indices ||
                (cand.edge_indices == best.edge_indices && cand.vertices < best.vertices))
                best = cand;
        };
        for (int dir = 0; dir < 2; ++dir) {
            BergeCycle cur = c;
            if (dir == 1) {
                // Reversed traversal v_t..v_1 pairs v'_i with e_{t-i}, and
                // v'_t = v_1 back to v'_1 = v_t with e_t.
                std::reverse(cur.vertices.begin(), cur.vertices.end());
                std::reverse(cur.edge_indices.begin(), cur.edge_indices.end());
                std::rotate(cur.edge_indices.begin(), cur.edge_indices.begin() + 1, cur.edge_indices.end());
            }
            for (std::size_t r = 0; r < t; ++r) {
                BergeCycle rot;
                for (std::size_t i = 0; i < t; ++i) {
                    rot.vertices.push_back(cur.vertices[(r + i) % t]);
                    rot.edge_indices.push_back(cur.edge_indices[(r + i) % t]);
                }
                consider(rot);
            }
        }
        return best;
    };

    std::optional<BergeCycle> best;
    std::vector<int> dist(static_cast<std::size_t>(total));
    std::vector<int> parent(static_cast<std::size_t>(total));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{root};
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : adj[static_cast<std::size_t>(u)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    q.push_back(w);
                    continue;
                }
                if (w == parent[static_cast<std::size_t>(u)]) continue;
                // Candidate closed walk root->u, (u,w), w->root.
                std::vector<int> pu, pw;
                for (int x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) pu.push_back(x);
                for (int x = w; x != -1; x = parent[static_cast<std::size_t>(x)]) pw.push_back(x);
                std::vector<int> seen = pu;
                seen.insert(seen.end(), pw.begin(), pw.end());
                std::sort(seen.begin(), seen.end());
                // Simple iff only the root repeats.
                bool simple = true;
                for (std::size_t i = 0; i + 1 < seen.size(); ++i)
                    if (seen[i] == seen[i + 1] && seen[i] != root) { simple = false; break; }
                if (!simple) continue;
                std::vector<int> cyc(pu.rbegin(), pu.rend()); // root .. u
                cyc.insert(cyc.end(), pw.begin(), pw.end() - 1); // w .. (excl root)
                // Rotate so the walk starts at a vertex node, then split.
                if (cyc[0] >= n) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
                BergeCycle c;
                for (std::size_t i = 0; i < cyc.size(); i += 2) {
                    c.vertices.push_back(cyc[i]);
                    c.edge_indices.push_back(cyc[i + 1] - n);
                }
                c = canonical(std::move(c));
                if (!best || c.vertices.size() < best->vertices.size() ||
                    (c.vertices.size() == best->vertices.size() &&
                     (c.edge_indices < best->edge_indices ||
                      (c.edge_indices == best->edge_indices && c.vertices < best->vertices))))
                    best = c;
            }
        }
    }
    return best;
}

// ---- shadow cycle structure ------------------------------------------------

namespace detail {

// Biconnected blocks of a simple graph given as an adjacency list. Returns
// the vertex count of the largest block; a block on >= 4 vertices is
// equivalent to the existence of a cycle of length >= 4.
inline int largest_block_order(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> num(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> stack;
    int timer = 0;
    int best = 0;

    struct Frame {
        int v, parent;
        std::size_t i;
    };
    for (int s = 0; s < n; ++s) {
        if (num[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<Frame> st{{s, -1, 0}};
        num[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.i < adj[static_cast<std::size_t>(f.v)].size()) {
                int w = adj[static_cast<std::size_t>(f.v)][f.i++];
                if (w == f.parent) continue;
                if (num[static_cast<std::size_t>(w)] < 0) {
                    stack.emplace_back(f.v, w);
                    num[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                    st.push_back({w, f.v, 0});
                } else if (num[static_cast<std::size_t>(w)] < num[static_cast<std::size_t>(f.v)]) {
                    stack.emplace_back(f.v, w);
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], num[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.v, p = f.parent;
                st.pop_back();
                if (p >= 0) {
                    low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
                    if (low[static_cast<std::size_t>(v)] >= num[static_cast<std::size_t>(p)]) {
                        // Pop one block.
                        std::vector<int> verts;
                        while (!stack.empty()) {
                            auto [a, b] = stack.back();
                            stack.pop_back();
                            verts.push_back(a);
                            verts.push_back(b);
                            if (a == p && b == v) break;
                        }
                        std::sort(verts.begin(), verts.end());
                        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                        best = std::max(best, static_cast<int>(verts.size()));
                    }
                }
            }
        }
    }
    return best;
}

} // namespace detail

/// True iff the shadow graph has a cycle of length at least four, i.e. some
/// biconnected block spans four or more vertices.
inline bool shadow_has_long_cycle(const ThreeGraph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (auto [a, b] : shadow(g)) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    return detail::largest_block_order(adj) >= 4;
}

struct TreeCensus {
    bool connected = false; // on the support
    int v = 0;              // support size
    int e = 0;
    bool acyclic = false;
    bool shadow_long_cycle = false;
};

inline TreeCensus tree_census(const ThreeGraph& g) {
    TreeCensus c;
    auto sup = support(g);
    c.v = static_cast<int>(sup.size());
    c.e = static_cast<int>(g.edges.size());
    detail::RollbackDsu dsu(g.n);
    for (const auto& e : g.edges) {
        dsu.unite(e[0], e[1]);
        dsu.unite(e[1], e[2]);
    }
    c.connected = true;
    for (int v : sup)
        if (dsu.find(v) != dsu.find(sup[0])) { c.connected = false; break; }
    if (sup.empty()) c.connected = false;
    c.acyclic = !berge_cycle(g).has_value();
    c.shadow_long_cycle = shadow_has_long_cycle(g);
    return c;
}

} // namespace h3lab
