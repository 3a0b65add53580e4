#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "h3lab/berge.hpp"
#include "h3lab/canonical.hpp"
#include "h3lab/rational.hpp"
#include "h3lab/three_graph.hpp"

namespace h3lab {

struct InvalidHomomorphism : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pair homomorphism stored as a partition of the shadow: `block[i]` is the
/// fiber of the i-th shadow pair (pairs sorted ascending), `rank[v]` the
/// position of vertex v in the linear order on the base.
struct PairPartition {
    ThreeGraph base;
    std::vector<int> rank;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> block;
};

inline std::vector<int> identity_rank(int n) {
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i;
    return r;
}

namespace detail {

inline int pair_index(const std::vector<std::pair<int, int>>& pairs, int a, int b) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
    if (it == pairs.end() || *it != key) throw BadInput("pair not in shadow");
    return static_cast<int>(it - pairs.begin());
}

// Per edge, the indices of its shadow pairs in arc-coordinate order
// (uv, vw, uw) for u < v < w under `rank`.
inline std::vector<std::array<int, 3>> edge_roles(const ThreeGraph& h, const std::vector<int>& rank,
                                                  const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::array<int, 3>> roles;
    roles.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::array<int, 3> s = e;
        std::sort(s.begin(), s.end(), [&](int a, int b) {
            return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
        });
        roles.push_back({pair_index(pairs, s[0], s[1]), pair_index(pairs, s[1], s[2]),
                         pair_index(pairs, s[0], s[2])});
    }
    return roles;
}

} // namespace detail

/// Induced arc set (one ordered block triple per edge, deduplicated).
/// Validates both invariants: distinct blocks within each edge, and identical
/// ordered triples whenever two edges touch the same block set.
inline std::vector<std::array<int, 3>> induced_arcs(const PairPartition& p) {
    if (static_cast<int>(p.rank.size()) != p.base.n)
        throw InvalidHomomorphism("ordering size mismatch");
    {
        auto r = p.rank;
        std::sort(r.begin(), r.end());
        for (int i = 0; i < p.base.n; ++i)
            if (r[static_cast<std::size_t>(i)] != i) throw InvalidHomomorphism("ordering is not a permutation");
    }
    if (p.pairs != shadow(p.base)) throw InvalidHomomorphism("pair list is not the shadow");
    if (p.block.size() != p.pairs.size()) throw InvalidHomomorphism("block table size mismatch");
    auto roles = detail::edge_roles(p.base, p.rank, p.pairs);
    std::map<std::array<int, 3>, std::pair<std::array<int, 3>, std::size_t>> by_support;
    std::vector<std::array<int, 3>> arcs;
    for (std::size_t ei = 0; ei < roles.size(); ++ei) {
        const auto& r = roles[ei];
        std::array<int, 3> arc{p.block[static_cast<std::size_t>(r[0])],
                               p.block[static_cast<std::size_t>(r[1])],
                               p.block[static_cast<std::size_t>(r[2])]};
        if (arc[0] == arc[1] || arc[1] == arc[2] || arc[0] == arc[2]) {
            const Edge& e = p.base.edges[ei];
            throw InvalidHomomorphism("images of the three pairs of edge {" + std::to_string(e[0]) +
                                      "," + std::to_string(e[1]) + "," + std::to_string(e[2]) +
                                      "} are not distinct");
        }
        std::array<int, 3> sup = arc;
        std::sort(sup.begin(), sup.end());
        auto [it, fresh] = by_support.insert({sup, {arc, ei}});
        if (!fresh && it->second.first != arc) {
            const Edge& a = p.base.edges[it->second.second];
            const Edge& b = p.base.edges[ei];
            throw InvalidHomomorphism("edges {" + std::to_string(a[0]) + "," + std::to_string(a[1]) +
                                      "," + std::to_string(a[2]) + "} and {" + std::to_string(b[0]) +
                                      "," + std::to_string(b[1]) + "," + std::to_string(b[2]) +
                                      "} map to two permutations of one block triple");
        }
        if (fresh) arcs.push_back(arc);
    }
    return arcs;
}

/// Exact maximum of |arcs(A)| / |blocks touched by A| over nonempty arc
/// subsets A, by branch and bound over the deduplicated arc list.
inline Rat max_subdensity(const std::vector<std::array<int, 3>>& arcs) {
    if (arcs.empty()) throw BadInput("max_subdensity: nonempty arc set required");
    if (arcs.size() > 26) throw SizeLimit("max_subdensity: more than 26 distinct arcs");
    int maxb = 0;
    for (const auto& a : arcs) maxb = std::max({maxb, a[0], a[1], a[2]});
    if (maxb >= 128) throw SizeLimit("max_subdensity: block ids exceed 128");
    struct Mask {
        std::uint64_t lo = 0, hi = 0;
        void set(int b) { (b < 64 ? lo : hi) |= 1ULL << (b & 63); }
        int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
        Mask operator|(const Mask& o) const { return Mask{lo | o.lo, hi | o.hi}; }
    };
    std::vector<Mask> sup(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (int b : arcs[i]) sup[i].set(b);
    Rat best(0, 1);
    int total = static_cast<int>(arcs.size());
    auto rec = [&](auto&& self, int idx, int a, Mask m) -> void {
        if (a > 0) {
            Rat here(a, m.count());
            if (best < here) best = here;
        }
        if (idx == total) return;
        int remaining = total - idx;
        int denom = std::max(m.count(), 1);
        if (a > 0 && !(best < Rat(a + remaining, denom))) return;
        self(self, idx + 1, a + 1, m | sup[static_cast<std::size_t>(idx)]);
        self(self, idx + 1, a, m);
    };
    rec(rec, 0, 0, Mask{});
    return best;
}

inline PairPartition injective_partition(const ThreeGraph& h, std::vector<int> rank) {
    PairPartition p;
    p.base = h;
    p.rank = std::move(rank);
    p.pairs = shadow(h);
    p.block.resize(p.pairs.size());
    for (std::size_t i = 0; i < p.block.size(); ++i) p.block[i] = static_cast<int>(i);
    return p;
}

/// Validates (ordering, blocks) as a pair homomorphism of H and returns the
/// exact maximum subhypergraph density of its image. Certifies upper bounds
/// on the pair density of graphs too large for the full minimization.
inline Rat check_pair_homomorphism(const ThreeGraph& h, const std::vector<int>& rank,
                                   const std::vector<int>& block) {
    if (h.edges.empty()) throw BadInput("nonempty hypergraph required");
    PairPartition p;
    p.base = h;
    p.rank = rank;
    p.pairs = shadow(h);
    p.block = block;
    return max_subdensity(induced_arcs(p));
}

// ---- partition search ------------------------------------------------------

namespace detail {

// Pair assignment schedule: walk the edges in input order, appending unseen
// pair indices; record which edges complete at each depth.
struct Schedule {
    std::vector<int> seq;                       // depth -> pair index
    std::vector<std::vector<int>> completions;  // depth -> edge ids
};

inline Schedule make_schedule(std::size_t n_pairs, const std::vector<std::array<int, 3>>& roles) {
    Schedule s;
    s.completions.resize(n_pairs);
    std::vector<int> depth_of(n_pairs, -1);
    for (std::size_t ei = 0; ei < roles.size(); ++ei) {
        int last = -1;
        for (int pi : roles[ei]) {
            if (depth_of[static_cast<std::size_t>(pi)] < 0) {
                depth_of[static_cast<std::size_t>(pi)] = static_cast<int>(s.seq.size());
                s.seq.push_back(pi);
            }
            last = std::max(last, depth_of[static_cast<std::size_t>(pi)]);
        }
        s.completions[static_cast<std::size_t>(last)].push_back(static_cast<int>(ei));
    }
    return s;
}

// Incremental partition state: RGS block assignment, arc bookkeeping with
// permutation-clash detection, and a rollback DSU over blocks that flags the
// first Berge cycle in the image.
class PartitionState {
public:
    PartitionState(std::size_t n_pairs, const std::vector<std::array<int, 3>>& roles)
        : roles_(roles), block_of_(n_pairs, -1), dsu_(static_cast<int>(n_pairs)) {}

    int used_blocks() const { return used_; }
    const std::vector<std::array<int, 3>>& arcs() const { return arcs_; }
    bool image_cyclic() const { return cycles_ > 0; }

    // Assigns block b to pair pi and processes the completed edges. Returns
    // false (fully rolled back) if an invariant breaks.
    bool assign(int pi, int b, const std::vector<int>& completed) {
        Undo u;
        u.pair = pi;
        u.prev_used = used_;
        u.dsu_mark = dsu_.mark();
        u.prev_cycles = cycles_;
        block_of_[static_cast<std::size_t>(pi)] = b;
        used_ = std::max(used_, b + 1);
        bool ok = true;
        for (int ei : completed) {
            const auto& r = roles_[static_cast<std::size_t>(ei)];
            std::array<int, 3> arc{block_of_[static_cast<std::size_t>(r[0])],
                                   block_of_[static_cast<std::size_t>(r[1])],
                                   block_of_[static_cast<std::size_t>(r[2])]};
            if (arc[0] == arc[1] || arc[1] == arc[2] || arc[0] == arc[2]) { ok = false; break; }
            std::array<int, 3> sup = arc;
            std::sort(sup.begin(), sup.end());
            auto [it, fresh] = support_.insert({sup, arc});
            if (!fresh) {
                if (it->second != arc) { ok = false; break; }
                continue; // repeated arc adds nothing to the image
            }
            u.support_added.push_back(sup);
            arcs_.push_back(arc);
            ++u.arcs_added;
            int ra = dsu_.find(sup[0]), rb = dsu_.find(sup[1]), rc = dsu_.find(sup[2]);
            if (ra == rb || rb == rc || ra == rc) ++cycles_;
            dsu_.unite(sup[0], sup[1]);
            dsu_.unite(sup[1], sup[2]);
        }
        if (!ok) {
            rollback(u);
            return false;
        }
        undo_.push_back(std::move(u));
        return true;
    }

    void unassign() {
        rollback(undo_.back());
        undo_.pop_back();
    }

private:
    struct Undo {
        int pair = -1;
        int prev_used = 0;
        int prev_cycles = 0;
        std::size_t dsu_mark = 0;
        int arcs_added = 0;
        std::vector<std::array<int, 3>> support_added;
    };

    void rollback(const Undo& u) {
        for (const auto& s : u.support_added) support_.erase(s);
        for (int i = 0; i < u.arcs_added; ++i) arcs_.pop_back();
        dsu_.rollback(u.dsu_mark);
        cycles_ = u.prev_cycles;
        used_ = u.prev_used;
        block_of_[static_cast<std::size_t>(u.pair)] = -1;
    }

    const std::vector<std::array<int, 3>>& roles_;
    std::vector<int> block_of_;
    std::map<std::array<int, 3>, std::array<int, 3>> support_;
    std::vector<std::array<int, 3>> arcs_;
    detail::RollbackDsu dsu_;
    int used_ = 0;
    int cycles_ = 0;
    std::vector<Undo> undo_;
};

} // namespace detail

enum class OrderingMode : std::uint8_t { identity, all };

struct MpairOptions {
    int max_shadow_pairs = 14;   // full minimization rejects larger shadows
    bool quotient_symmetries = true;
    int threads = 1;
    long long node_budget = 4'000'000'000LL;
};

struct MpairResult {
    Rat value;
    PairPartition witness;
    long long nodes = 0;
    int orderings_searched = 0;
};

/// All vertex orderings (as rank arrays), one representative per orbit under
/// the automorphism group of H and order reversal; both actions preserve the
/// pair-density objective.
inline std::vector<std::vector<int>> ordering_representatives(const ThreeGraph& h, bool quotient) {
    std::vector<int> perm = identity_rank(h.n);
    std::vector<std::vector<int>> auts;
    if (quotient) auts = automorphisms(h);
    std::vector<std::vector<int>> reps;
    std::vector<int> cand(static_cast<std::size_t>(h.n));
    do {
        bool minimal = true;
        if (quotient) {
            for (const auto& phi : auts) {
                for (int rev = 0; rev < 2 && minimal; ++rev) {
                    for (int v = 0; v < h.n; ++v) {
                        int r = perm[static_cast<std::size_t>(phi[static_cast<std::size_t>(v)])];
                        cand[static_cast<std::size_t>(v)] = rev ? h.n - 1 - r : r;
                    }
                    if (cand < perm) minimal = false;
                }
                if (!minimal) break;
            }
        }
        if (minimal) reps.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return reps;
}

namespace detail {

// Minimizing search over valid partitions for one ordering. `best` enters as
// the bound and leaves as the improved optimum; witness updated alongside.
inline void mpair_search_one(const ThreeGraph& h, const std::vector<int>& rank,
                             const std::vector<std::pair<int, int>>& pairs, Rat& best,
                             PairPartition& witness, long long& nodes, long long node_budget) {
    auto roles = edge_roles(h, rank, pairs);
    auto sched = make_schedule(pairs.size(), roles);
    PartitionState st(pairs.size(), roles);
    int P = static_cast<int>(pairs.size());
    std::vector<int> assigned(static_cast<std::size_t>(P), -1);
    const Rat floor(1, 3);
    auto rec = [&](auto&& self, int d) -> void {
        if (!(floor < best)) return; // 1/3 is the global minimum
        if (d == P) {
            Rat val = max_subdensity(st.arcs());
            if (val < best) {
                best = val;
                witness.base = h;
                witness.rank = rank;
                witness.pairs = pairs;
                witness.block.assign(assigned.begin(), assigned.end());
            }
            return;
        }
        int pi = sched.seq[static_cast<std::size_t>(d)];
        int limit = std::min(st.used_blocks(), P - 1);
        for (int b = 0; b <= limit; ++b) {
            if (++nodes > node_budget) throw SizeLimit("mpair_exact: node budget exceeded");
            if (!st.assign(pi, b, sched.completions[static_cast<std::size_t>(d)])) continue;
            assigned[static_cast<std::size_t>(pi)] = b;
            bool prune = false;
            if (!sched.completions[static_cast<std::size_t>(d)].empty() && !st.arcs().empty()) {
                Rat lb = max_subdensity(st.arcs());
                if (!(lb < best)) prune = true;
            }
            if (!prune) self(self, d + 1);
            assigned[static_cast<std::size_t>(pi)] = -1;
            st.unassign();
        }
    };
    rec(rec, 0);
}

} // namespace detail

/// Exact pair density: minimum over vertex orderings (identity only when so
/// requested) and valid partitions of the maximum image subdensity, plus an
/// optimal partition as certificate.
inline MpairResult mpair_exact(const ThreeGraph& h, OrderingMode mode = OrderingMode::all,
                               const MpairOptions& opt = {}) {
    if (h.edges.empty()) throw BadInput("mpair_exact: nonempty hypergraph required");
    auto pairs = shadow(h);
    if (static_cast<int>(pairs.size()) > opt.max_shadow_pairs)
        throw SizeLimit("mpair_exact: shadow larger than the enumeration cap");

    std::vector<std::vector<int>> reps;
    if (mode == OrderingMode::identity) {
        reps.push_back(identity_rank(h.n));
    } else {
        if (h.n > 8) throw SizeLimit("mpair_exact: too many vertex orderings");
        reps = ordering_representatives(h, opt.quotient_symmetries);
    }

    MpairResult res;
    res.witness = injective_partition(h, reps.front());
    res.value = max_subdensity(induced_arcs(res.witness));
    res.orderings_searched = static_cast<int>(reps.size());

    int threads = std::max(1, opt.threads);
    if (threads == 1) {
        for (const auto& rank : reps)
            detail::mpair_search_one(h, rank, pairs, res.value, res.witness, res.nodes, opt.node_budget);
        return res;
    }
    // Deterministic parallel reduction: contiguous chunks, each with a local
    // bound seeded from the injective value, merged in chunk order.
    struct ChunkOut {
        Rat value;
        PairPartition witness;
        long long nodes = 0;
        bool improved = false;
    };
    std::size_t nchunks = std::min<std::size_t>(static_cast<std::size_t>(threads), reps.size());
    std::vector<ChunkOut> outs(nchunks);
    std::vector<std::thread> pool;
    Rat init = res.value;
    for (std::size_t c = 0; c < nchunks; ++c) {
        pool.emplace_back([&, c]() {
            ChunkOut& o = outs[c];
            o.value = init;
            o.witness = res.witness;
            std::size_t lo = c * reps.size() / nchunks, hi = (c + 1) * reps.size() / nchunks;
            for (std::size_t i = lo; i < hi; ++i) {
                Rat before = o.value;
                detail::mpair_search_one(h, reps[i], pairs, o.value, o.witness, o.nodes,
                                         opt.node_budget);
                if (o.value < before) o.improved = true;
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& o : outs) {
        res.nodes += o.nodes;
        if (o.improved && o.value < res.value) {
            res.value = o.value;
            res.witness = o.witness;
        }
    }
    return res;
}

struct AvoidabilityResult {
    bool avoidable = false;
    Rat mpair;
    std::optional<PairPartition> refutation; // Berge-acyclic image when not avoidable
    long long nodes = 0;
};

/// Decides whether every pair-homomorphic image of H contains a Berge cycle.
/// Runs the direct image search (early exit on the first acyclic image) and
/// the density route; the two characterizations must agree.
inline AvoidabilityResult is_avoidable(const ThreeGraph& h, const MpairOptions& opt = {}) {
    if (h.edges.empty()) {
        AvoidabilityResult r;
        r.avoidable = false;
        r.mpair = Rat(0, 1);
        r.refutation = PairPartition{h, identity_rank(h.n), {}, {}};
        return r;
    }
    auto pairs = shadow(h);
    if (static_cast<int>(pairs.size()) > opt.max_shadow_pairs)
        throw SizeLimit("is_avoidable: shadow larger than the enumeration cap");
    AvoidabilityResult res;

    std::vector<std::vector<int>> reps;
    if (h.ordered) {
        reps.push_back(identity_rank(h.n));
    } else {
        if (h.n > 8) throw SizeLimit("is_avoidable: too many vertex orderings");
        reps = ordering_representatives(h, opt.quotient_symmetries);
    }
    bool refuted = false;
    for (const auto& rank : reps) {
        if (refuted) break;
        auto roles = detail::edge_roles(h, rank, pairs);
        auto sched = detail::make_schedule(pairs.size(), roles);
        detail::PartitionState st(pairs.size(), roles);
        int P = static_cast<int>(pairs.size());
        std::vector<int> assigned(static_cast<std::size_t>(P), -1);
        auto rec = [&](auto&& self, int d) -> bool {
            if (st.image_cyclic()) return false; // cycles never disappear
            if (d == P) {
                res.refutation = PairPartition{h, rank, pairs, assigned};
                return true;
            }
            int pi = sched.seq[static_cast<std::size_t>(d)];
            int limit = std::min(st.used_blocks(), P - 1);
            for (int b = 0; b <= limit; ++b) {
                if (++res.nodes > opt.node_budget) throw SizeLimit("is_avoidable: node budget exceeded");
                if (!st.assign(pi, b, sched.completions[static_cast<std::size_t>(d)])) continue;
                assigned[static_cast<std::size_t>(pi)] = b;
                if (self(self, d + 1)) return true;
                assigned[static_cast<std::size_t>(pi)] = -1;
                st.unassign();
            }
            return false;
        };
        refuted = rec(rec, 0);
    }
    res.avoidable = !refuted;

    MpairResult mp = mpair_exact(h, h.ordered ? OrderingMode::identity : OrderingMode::all, opt);
    res.mpair = mp.value;
    bool via_density = !(mp.value < Rat(1, 2));
    if (via_density != res.avoidable)
        throw std::logic_error("avoidability characterizations disagree");
    return res;
}

} // namespace h3lab
