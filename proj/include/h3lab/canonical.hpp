#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "h3lab/three_graph.hpp"

namespace h3lab {

inline ThreeGraph relabel(const ThreeGraph& h, const std::vector<int>& perm) {
    std::vector<Edge> es;
    es.reserve(h.edges.size());
    for (const auto& e : h.edges)
        es.push_back(sorted_edge(perm[static_cast<std::size_t>(e[0])],
                                 perm[static_cast<std::size_t>(e[1])],
                                 perm[static_cast<std::size_t>(e[2])]));
    return make_three_graph(h.n, std::move(es), h.ordered);
}

namespace detail {

constexpr int kCanonicalMaxN = 10;

// Vertex invariant used to restrict the permutation search: degree plus the
// sorted multiset of degrees of co-neighbors. Isomorphisms preserve it.
inline std::vector<std::vector<int>> invariant_classes(const ThreeGraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.n), 0);
    for (const auto& e : h.edges)
        for (int v : e) ++deg[static_cast<std::size_t>(v)];
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(h.n));
    for (const auto& e : h.edges)
        for (int i = 0; i < 3; ++i) {
            sig[static_cast<std::size_t>(e[i])].push_back(deg[static_cast<std::size_t>(e[(i + 1) % 3])]);
            sig[static_cast<std::size_t>(e[i])].push_back(deg[static_cast<std::size_t>(e[(i + 2) % 3])]);
        }
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> groups;
    for (int v = 0; v < h.n; ++v) {
        std::sort(sig[static_cast<std::size_t>(v)].begin(), sig[static_cast<std::size_t>(v)].end());
        groups[{deg[static_cast<std::size_t>(v)], sig[static_cast<std::size_t>(v)]}].push_back(v);
    }
    std::vector<std::vector<int>> classes;
    for (auto& [key, vs] : groups) classes.push_back(vs);
    return classes;
}

// Enumerates every permutation that maps the members of each invariant class
// onto a canonical consecutive label range (classes in key order), invoking
// fn(perm). Isomorphic graphs have identical class-key multisets, so they
// explore identical relabeled-edge-list candidate sets.
template <typename Fn>
void for_each_class_perm(const std::vector<std::vector<int>>& classes,
                         const std::vector<std::vector<int>>& targets, int n, Fn&& fn) {
    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<bool>> used(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) used[i].assign(classes[i].size(), false);
    auto rec = [&](auto&& self, std::size_t ci, std::size_t within) -> void {
        if (ci == classes.size()) {
            fn(perm);
            return;
        }
        const auto& cls = classes[ci];
        if (within == cls.size()) {
            self(self, ci + 1, 0);
            return;
        }
        for (std::size_t j = 0; j < cls.size(); ++j) {
            if (used[ci][j]) continue;
            used[ci][j] = true;
            perm[static_cast<std::size_t>(cls[within])] = targets[ci][j];
            self(self, ci, within + 1);
            used[ci][j] = false;
        }
    };
    rec(rec, 0, 0);
}

// Canonical consecutive label ranges, one per class in key order. Isomorphic
// graphs have identical class-key multisets, so they explore identical
// relabeled-edge-list candidate sets.
inline std::vector<std::vector<int>> range_targets(const std::vector<std::vector<int>>& classes) {
    std::vector<std::vector<int>> t(classes.size());
    int next = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes[i].size(); ++j) t[i].push_back(next++);
    return t;
}

} // namespace detail

/// Canonical byte encoding: equal iff isomorphic (same n). Minimizes the
/// relabeled edge list over invariant-respecting permutations.
inline std::vector<std::uint8_t> canonical_form(const ThreeGraph& h) {
    if (h.n > detail::kCanonicalMaxN) throw SizeLimit("canonical_form: n too large");
    auto classes = detail::invariant_classes(h);
    std::vector<Edge> best;
    bool have = false;
    detail::for_each_class_perm(classes, detail::range_targets(classes), h.n, [&](const std::vector<int>& perm) {
        std::vector<Edge> es;
        es.reserve(h.edges.size());
        for (const auto& e : h.edges)
            es.push_back(sorted_edge(perm[static_cast<std::size_t>(e[0])],
                                     perm[static_cast<std::size_t>(e[1])],
                                     perm[static_cast<std::size_t>(e[2])]));
        std::sort(es.begin(), es.end());
        if (!have || es < best) {
            best = std::move(es);
            have = true;
        }
    });
    std::vector<std::uint8_t> out;
    out.push_back(static_cast<std::uint8_t>(h.n));
    out.push_back(static_cast<std::uint8_t>(best.size()));
    for (const auto& e : best)
        for (int v : e) out.push_back(static_cast<std::uint8_t>(v));
    return out;
}

inline bool isomorphic(const ThreeGraph& a, const ThreeGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

/// All vertex permutations fixing the edge set.
inline std::vector<std::vector<int>> automorphisms(const ThreeGraph& h) {
    if (h.n > detail::kCanonicalMaxN) throw SizeLimit("automorphisms: n too large");
    auto classes = detail::invariant_classes(h);
    std::vector<std::vector<int>> out;
    detail::for_each_class_perm(classes, classes, h.n, [&](const std::vector<int>& perm) {
        std::vector<Edge> es;
        es.reserve(h.edges.size());
        for (const auto& e : h.edges)
            es.push_back(sorted_edge(perm[static_cast<std::size_t>(e[0])],
                                     perm[static_cast<std::size_t>(e[1])],
                                     perm[static_cast<std::size_t>(e[2])]));
        std::sort(es.begin(), es.end());
        if (es == h.edges) out.push_back(perm);
    });
    return out;
}

/// Pairwise non-isomorphic 3-graphs with at most e_max edges, one per
/// isomorphism class: the empty graph plus, for each n in 3..n_max, every
/// graph whose edges cover all n vertices. Emitted in (n, e, canonical form)
/// order.
inline std::vector<ThreeGraph> enumerate_all(int n_max, int e_max) {
    if (n_max > 7) throw SizeLimit("enumerate_all: n_max capped at 7");
    std::vector<ThreeGraph> out;
    out.push_back(make_three_graph(0, {}));
    for (int n = 3; n <= n_max; ++n) {
        std::vector<Edge> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) all.push_back(Edge{a, b, c});
        int tot = static_cast<int>(all.size());
        std::set<std::vector<std::uint8_t>> seen;
        std::vector<std::pair<std::vector<std::uint8_t>, ThreeGraph>> found;
        std::vector<int> pick;
        auto rec = [&](auto&& self, int start) -> void {
            if (!pick.empty()) {
                std::vector<Edge> es;
                for (int i : pick) es.push_back(all[static_cast<std::size_t>(i)]);
                ThreeGraph g = make_three_graph(n, es);
                if (static_cast<int>(support(g).size()) == n) {
                    auto cf = canonical_form(g);
                    if (seen.insert(cf).second) found.emplace_back(cf, g);
                }
            }
            if (static_cast<int>(pick.size()) == e_max) return;
            for (int i = start; i < tot; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
        std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
            if (x.second.edges.size() != y.second.edges.size())
                return x.second.edges.size() < y.second.edges.size();
            return x.first < y.first;
        });
        for (auto& [cf, g] : found) out.push_back(std::move(g));
    }
    return out;
}

} // namespace h3lab
