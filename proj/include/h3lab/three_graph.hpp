#pragma once

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace h3lab {

using Edge = std::array<int, 3>; // ascending triple

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A 3-uniform hypergraph on vertices 0..n-1. Edges are ascending triples,
/// stored sorted and without duplicates. When `ordered` is set, the identity
/// order on 0..n-1 is the linear order of the vertex set.
struct ThreeGraph {
    int n = 0;
    std::vector<Edge> edges;
    bool ordered = false;
};

inline Edge sorted_edge(int a, int b, int c) {
    Edge e{a, b, c};
    std::sort(e.begin(), e.end());
    return e;
}

inline ThreeGraph make_three_graph(int n, std::vector<Edge> edges, bool ordered = false) {
    if (n < 0) throw BadInput("vertex count must be nonnegative");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2])
            throw BadInput("edge has a repeated vertex");
        if (e[0] < 0 || e[2] >= n)
            throw BadInput("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw BadInput("duplicate edge");
    return ThreeGraph{n, std::move(edges), ordered};
}

inline bool operator==(const ThreeGraph& a, const ThreeGraph& b) {
    return a.n == b.n && a.edges == b.edges && a.ordered == b.ordered;
}

/// All vertex pairs contained in some edge, ascending.
inline std::vector<std::pair<int, int>> shadow(const ThreeGraph& h) {
    std::vector<std::pair<int, int>> p;
    p.reserve(h.edges.size() * 3);
    for (const auto& e : h.edges) {
        p.emplace_back(e[0], e[1]);
        p.emplace_back(e[1], e[2]);
        p.emplace_back(e[0], e[2]);
    }
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

/// Vertices that appear in at least one edge, ascending.
inline std::vector<int> support(const ThreeGraph& h) {
    std::vector<int> v;
    for (const auto& e : h.edges) v.insert(v.end(), e.begin(), e.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// True iff any two distinct edges share at most one vertex (equivalently the
/// graph is B-free, B being the 3-graph with 4 vertices and 2 edges).
inline bool is_linear(const ThreeGraph& h) {
    std::map<std::pair<int, int>, int> cover;
    for (const auto& e : h.edges) {
        if (++cover[{e[0], e[1]}] > 1) return false;
        if (++cover[{e[1], e[2]}] > 1) return false;
        if (++cover[{e[0], e[2]}] > 1) return false;
    }
    return true;
}

// ---- generators ------------------------------------------------------------
// Canonical numberings are part of the file-format contract; see README.

/// Tight cycle: vertices Z_n, edges {k, k+1, k+2} mod n. Consecutive triples
/// coincide as sets for n = 3 and n = 4, so those cases collapse to a single
/// edge and to all four triples on four vertices respectively.
inline ThreeGraph tight_cycle(int n) {
    if (n < 3) throw BadInput("tight_cycle: n must be at least 3");
    std::vector<Edge> es;
    for (int k = 0; k < n; ++k) es.push_back(sorted_edge(k, (k + 1) % n, (k + 2) % n));
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return make_three_graph(n, std::move(es));
}

/// Link of the cycle C_n: cycle vertices 0..n-1, apex n.
inline ThreeGraph link_of_cycle(int n) {
    if (n < 3) throw BadInput("link_of_cycle: n must be at least 3");
    std::vector<Edge> es;
    for (int k = 0; k < n; ++k) es.push_back(sorted_edge(k, (k + 1) % n, n));
    return make_three_graph(n + 1, std::move(es));
}

/// Link of the path on n vertices: path vertices 0..n-1, apex n.
inline ThreeGraph link_of_path(int n) {
    if (n < 1) throw BadInput("link_of_path: n must be at least 1");
    std::vector<Edge> es;
    for (int k = 0; k + 1 < n; ++k) es.push_back(sorted_edge(k, k + 1, n));
    return make_three_graph(n + 1, std::move(es));
}

/// Complete 3-graph on s vertices.
inline ThreeGraph complete(int s) {
    if (s < 3) throw BadInput("complete: s must be at least 3");
    std::vector<Edge> es;
    for (int a = 0; a < s; ++a)
        for (int b = a + 1; b < s; ++b)
            for (int c = b + 1; c < s; ++c) es.push_back(Edge{a, b, c});
    return make_three_graph(s, std::move(es));
}

/// Two links of 12-vertex paths glued at eight vertices. Numbering: apex of
/// the first link is 0 and its path is 1..12; apex of the second link is 13;
/// the second path visits 2,5,14,15,6,1,11,8,16,17,7,12 in order (the four
/// fresh vertices 14..17 are its 3rd, 4th, 9th and 10th stops).
inline ThreeGraph glued_link_paths() {
    std::vector<Edge> es;
    for (int i = 1; i <= 11; ++i) es.push_back(sorted_edge(0, i, i + 1));
    const int path2[12] = {2, 5, 14, 15, 6, 1, 11, 8, 16, 17, 7, 12};
    for (int i = 0; i + 1 < 12; ++i) es.push_back(sorted_edge(13, path2[i], path2[i + 1]));
    return make_three_graph(18, std::move(es));
}

// ---- oriented 3-graphs -----------------------------------------------------

/// Edge set of ordered vertex triples with at most one permutation per
/// underlying vertex set; all coordinates pairwise distinct.
struct OrientedThreeGraph {
    int n = 0;
    std::vector<std::array<int, 3>> arcs; // sorted
};

inline OrientedThreeGraph make_oriented(int n, std::vector<std::array<int, 3>> arcs) {
    if (n < 0) throw BadInput("vertex count must be nonnegative");
    std::vector<Edge> seen;
    for (const auto& a : arcs) {
        if (a[0] == a[1] || a[1] == a[2] || a[0] == a[2])
            throw BadInput("arc has a repeated coordinate");
        if (std::min({a[0], a[1], a[2]}) < 0 || std::max({a[0], a[1], a[2]}) >= n)
            throw BadInput("arc coordinate out of range");
        seen.push_back(sorted_edge(a[0], a[1], a[2]));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw BadInput("two permutations of one triple");
    std::sort(arcs.begin(), arcs.end());
    return OrientedThreeGraph{n, std::move(arcs)};
}

// ---- text formats ----------------------------------------------------------
// ".h3":  header `h3 <n> <m> [ordered]`, then m lines `u v w` with u<v<w.
// ".oh3": header `oh3 <n> <m>`, then m lines with ordered triples.

inline void write_h3(std::ostream& os, const ThreeGraph& h) {
    os << "h3 " << h.n << ' ' << h.edges.size();
    if (h.ordered) os << " ordered";
    os << '\n';
    for (const auto& e : h.edges) os << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

inline ThreeGraph parse_h3(std::istream& is) {
    std::string tag;
    int n = 0;
    std::size_t m = 0;
    if (!(is >> tag >> n >> m) || tag != "h3") throw BadInput("bad .h3 header");
    std::string rest;
    std::getline(is, rest);
    bool ordered = rest.find("ordered") != std::string::npos;
    std::vector<Edge> es(m);
    for (auto& e : es) {
        if (!(is >> e[0] >> e[1] >> e[2])) throw BadInput("truncated .h3 edge list");
        if (!(e[0] < e[1] && e[1] < e[2])) throw BadInput(".h3 edge not ascending");
    }
    return make_three_graph(n, std::move(es), ordered);
}

inline void write_oh3(std::ostream& os, const OrientedThreeGraph& g) {
    os << "oh3 " << g.n << ' ' << g.arcs.size() << '\n';
    for (const auto& a : g.arcs) os << a[0] << ' ' << a[1] << ' ' << a[2] << '\n';
}

inline OrientedThreeGraph parse_oh3(std::istream& is) {
    std::string tag;
    int n = 0;
    std::size_t m = 0;
    if (!(is >> tag >> n >> m) || tag != "oh3") throw BadInput("bad .oh3 header");
    std::vector<std::array<int, 3>> arcs(m);
    for (auto& a : arcs)
        if (!(is >> a[0] >> a[1] >> a[2])) throw BadInput("truncated .oh3 arc list");
    return make_oriented(n, std::move(arcs));
}

inline std::string to_h3_string(const ThreeGraph& h) {
    std::ostringstream os;
    write_h3(os, h);
    return os.str();
}

inline ThreeGraph from_h3_string(const std::string& s) {
    std::istringstream is(s);
    return parse_h3(is);
}

} // namespace h3lab
