#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "h3lab/host.hpp"
#include "h3lab/rng.hpp"
#include "h3lab/three_graph.hpp"

namespace h3lab {

struct ConstructionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- pair constructions ------------------------------------------------------

/// Coloring of triples of [0,N) by chi(u,v,w) = g(f(uv), f(vw), f(wu)) for
/// u < v < w. f is a symmetric palette table over unordered pairs, g a
/// red/blue table over ordered palette triples.
struct PairConstruction {
    int N = 0;
    int t = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint8_t> f; // upper-triangular, index pair_slot(u,v)
    std::vector<std::uint8_t> g; // t*t*t cells, 1 = red, index (a*t+b)*t+c

    int pair_slot(int u, int v) const { // requires u < v
        return u * N - u * (u + 1) / 2 + (v - u - 1);
    }
    int f_at(int u, int v) const {
        if (u > v) std::swap(u, v);
        return f[static_cast<std::size_t>(pair_slot(u, v))];
    }
    bool g_red(int a, int b, int c) const {
        return g[static_cast<std::size_t>((a * t + b) * t + c)] != 0;
    }
    Color chi(int u, int v, int w) const {
        if (!(0 <= u && u < v && v < w && w < N))
            throw BadInput("chi: triple must be ascending and in range");
        return g_red(f_at(u, v), f_at(v, w), f_at(w, u)) ? Color::red : Color::blue;
    }
};

class PairHost final : public TripleColoring {
public:
    explicit PairHost(PairConstruction pc) : pc_(std::move(pc)) {}
    int size() const override { return pc_.N; }
    Color color(int u, int v, int w) const override { return pc_.chi(u, v, w); }
    const PairConstruction& construction() const { return pc_; }

private:
    PairConstruction pc_;
};

/// Independent uniform palette value per unordered pair, drawn in ascending
/// (u,v) order from a SplitMix64 stream; identical tables for identical seeds
/// on every platform.
inline std::vector<std::uint8_t> random_f(int n, int t, std::uint64_t seed) {
    if (n < 2 || t < 1 || t > 255) throw BadInput("random_f: need N >= 2 and 1 <= t <= 255");
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> f(static_cast<std::size_t>(n) * (n - 1) / 2);
    std::size_t idx = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            f[idx++] = static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(t)));
    return f;
}

// ---- conditions on g ---------------------------------------------------------

struct Cond3Verdict {
    bool exact = false;
    bool verified = false;
    long long trials = 0;
    long long failures = 0;
    int floor_size = 0;
    std::array<std::vector<int>, 3> witness; // an all-blue X,Y,Z when refuted
};

struct GConditionReport {
    bool cond1 = true;
    std::vector<std::array<int, 3>> cond1_witness; // clashing red cells
    bool cond2 = true;
    std::vector<int> cond2_witness; // vertex set holding >= k/2 red cells
    Cond3Verdict cond3;
};

namespace detail {

inline std::vector<std::array<int, 3>> red_cells(const std::vector<std::uint8_t>& g, int t) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < t; ++a)
        for (int b = 0; b < t; ++b)
            for (int c = 0; c < t; ++c)
                if (g[static_cast<std::size_t>((a * t + b) * t + c)]) out.push_back({a, b, c});
    return out;
}

struct VertexMask {
    std::uint64_t lo = 0, hi = 0;
    void set(int b) { (b < 64 ? lo : hi) |= 1ULL << (b & 63); }
    bool test(int b) const { return ((b < 64 ? lo : hi) >> (b & 63)) & 1ULL; }
    int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
    bool intersects(const VertexMask& o) const { return (lo & o.lo) || (hi & o.hi); }
    VertexMask operator|(const VertexMask& o) const { return {lo | o.lo, hi | o.hi}; }
};

// Smallest violating configuration for condition 2: a set of red cells S with
// |support(S)| <= k_max and |S| >= |support(S)|/2. A minimum-cardinality
// violation is support-connected, so connected enumeration is exhaustive.
inline std::optional<std::vector<int>> cond2_violation(const std::vector<std::array<int, 3>>& cells,
                                                       int k_max, long long budget = 80'000'000LL) {
    int c = static_cast<int>(cells.size());
    std::vector<VertexMask> sup(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i)
        for (int v : cells[static_cast<std::size_t>(i)]) sup[static_cast<std::size_t>(i)].set(v);
    long long nodes = 0;
    std::optional<std::vector<int>> hit;
    std::vector<int> members;
    auto emit = [&](const VertexMask& m) {
        std::vector<int> vs;
        for (int v = 0; v < 128; ++v)
            if (m.test(v)) vs.push_back(v);
        hit = vs;
    };
    auto rec = [&](auto&& self, int root, VertexMask m, int count, std::vector<int> ext,
                   std::size_t banned_below) -> bool {
        if (++nodes > budget) throw SizeLimit("condition-2 scan exceeded its node budget");
        if (2 * count >= m.count()) {
            emit(m);
            return true;
        }
        for (std::size_t idx = banned_below; idx < ext.size(); ++idx) {
            int j = ext[idx];
            VertexMask m2 = m | sup[static_cast<std::size_t>(j)];
            if (m2.count() > k_max) continue;
            std::vector<int> ext2(ext.begin(), ext.end());
            for (int cand = root + 1; cand < c; ++cand) {
                if (std::find(members.begin(), members.end(), cand) != members.end()) continue;
                if (std::find(ext2.begin(), ext2.end(), cand) != ext2.end()) continue;
                if (sup[static_cast<std::size_t>(cand)].intersects(m2) &&
                    !sup[static_cast<std::size_t>(cand)].intersects(m))
                    ext2.push_back(cand);
            }
            members.push_back(j);
            if (self(self, root, m2, count + 1, ext2, idx + 1)) return true;
            members.pop_back();
        }
        return false;
    };
    for (int r = 0; r < c; ++r) {
        if (sup[static_cast<std::size_t>(r)].count() > k_max) continue;
        std::vector<int> ext;
        for (int j = r + 1; j < c; ++j)
            if (sup[static_cast<std::size_t>(j)].intersects(sup[static_cast<std::size_t>(r)])) ext.push_back(j);
        members.assign(1, r);
        if (rec(rec, r, sup[static_cast<std::size_t>(r)], 1, ext, 0)) return hit;
    }
    return std::nullopt;
}

// Exact condition-3 scan for floor sizes s <= 3 on palettes up to 64: for
// each X, rows over z per y of "blue for all x in X", then K_{s,s} detection
// by row intersection.
inline std::optional<std::array<std::vector<int>, 3>> cond3_exact_violation(
    const std::vector<std::uint8_t>& g, int t, int s) {
    if (s > 3 || t > 64) throw SizeLimit("exact condition-3 scan limited to floor <= 3 and t <= 64");
    auto red = [&](int a, int b, int c) { return g[static_cast<std::size_t>((a * t + b) * t + c)] != 0; };
    std::vector<int> X(static_cast<std::size_t>(s));
    std::vector<std::uint64_t> row(static_cast<std::size_t>(t));
    std::optional<std::array<std::vector<int>, 3>> out;

    auto scan_for_X = [&]() -> bool {
        for (int y = 0; y < t; ++y) {
            std::uint64_t bits = 0;
            for (int z = 0; z < t; ++z) {
                bool blue = true;
                for (int x : X)
                    if (red(x, y, z)) { blue = false; break; }
                if (blue) bits |= 1ULL << z;
            }
            row[static_cast<std::size_t>(y)] = bits;
        }
        std::vector<int> Y(static_cast<std::size_t>(s));
        auto recy = [&](auto&& self, int start, int depth, std::uint64_t zmask) -> bool {
            if (depth == s) {
                if (std::popcount(zmask) < s) return false;
                std::vector<int> Z;
                for (int z = 0; z < t && static_cast<int>(Z.size()) < s; ++z)
                    if ((zmask >> z) & 1ULL) Z.push_back(z);
                out = std::array<std::vector<int>, 3>{X, Y, Z};
                return true;
            }
            for (int y = start; y < t; ++y) {
                Y[static_cast<std::size_t>(depth)] = y;
                std::uint64_t zm = zmask & row[static_cast<std::size_t>(y)];
                if (std::popcount(zm) >= s && self(self, y + 1, depth + 1, zm)) return true;
            }
            return false;
        };
        std::uint64_t full = (t == 64) ? ~0ULL : ((1ULL << t) - 1);
        return recy(recy, 0, 0, full);
    };

    auto recx = [&](auto&& self, int start, int depth) -> bool {
        if (depth == s) return scan_for_X();
        for (int x = start; x < t; ++x) {
            X[static_cast<std::size_t>(depth)] = x;
            if (self(self, x + 1, depth + 1)) return true;
        }
        return false;
    };
    recx(recx, 0, 0);
    return out;
}

} // namespace detail

struct VerifyGOptions {
    bool cond3_sampled = false; // force sampling even when exact is feasible
    long long cond3_trials = 2000;
    std::uint64_t cond3_seed = 0;
    long long cond2_budget = 80'000'000LL;
};

/// Checks the three conditions: red is an oriented 3-graph; every k <= k_max
/// palette vertices carry fewer than k/2 red cells; no all-blue balanced
/// tripartite system at the floor size ceil(t^(1-eps)).
inline GConditionReport verify_g(const std::vector<std::uint8_t>& g, int t, int k_max, double eps,
                                 const VerifyGOptions& opt = {}) {
    if (static_cast<std::size_t>(t) * t * t != g.size()) throw BadInput("verify_g: table size mismatch");
    GConditionReport rep;

    // Condition 1, always exact.
    std::map<std::array<int, 3>, std::array<int, 3>> by_sup;
    for (int a = 0; a < t && rep.cond1; ++a)
        for (int b = 0; b < t && rep.cond1; ++b)
            for (int c = 0; c < t && rep.cond1; ++c) {
                if (!g[static_cast<std::size_t>((a * t + b) * t + c)]) continue;
                if (a == b || b == c || a == c) {
                    rep.cond1 = false;
                    rep.cond1_witness = {{{a, b, c}}};
                    break;
                }
                std::array<int, 3> sup{a, b, c};
                std::sort(sup.begin(), sup.end());
                auto [it, fresh] = by_sup.insert({sup, {a, b, c}});
                if (!fresh) {
                    rep.cond1 = false;
                    rep.cond1_witness = {it->second, {a, b, c}};
                }
            }

    // Condition 2, exact via the connected-configuration scan.
    auto cells = detail::red_cells(g, t);
    auto viol = detail::cond2_violation(cells, k_max, opt.cond2_budget);
    if (viol) {
        rep.cond2 = false;
        rep.cond2_witness = *viol;
    }

    // Condition 3.
    int s = static_cast<int>(std::ceil(std::pow(static_cast<double>(t), 1.0 - eps)));
    s = std::max(s, 1);
    rep.cond3.floor_size = s;
    bool exact_ok = !opt.cond3_sampled && s <= 3 && t <= 64;
    if (exact_ok) {
        rep.cond3.exact = true;
        auto w = detail::cond3_exact_violation(g, t, s);
        rep.cond3.verified = !w.has_value();
        if (w) rep.cond3.witness = *w;
    } else {
        if (s > t) throw BadInput("verify_g: floor size exceeds palette");
        rep.cond3.exact = false;
        SplitMix64 rng(opt.cond3_seed);
        rep.cond3.trials = opt.cond3_trials;
        rep.cond3.verified = true;
        auto red = [&](int a, int b, int c) { return g[static_cast<std::size_t>((a * t + b) * t + c)] != 0; };
        for (long long it = 0; it < opt.cond3_trials; ++it) {
            auto X = rng.subset(t, s), Y = rng.subset(t, s), Z = rng.subset(t, s);
            bool all_blue = true;
            for (int x : X)
                for (int y : Y) {
                    for (int z : Z)
                        if (red(x, y, z)) { all_blue = false; break; }
                    if (!all_blue) break;
                }
            if (all_blue) {
                if (rep.cond3.failures == 0) rep.cond3.witness = {X, Y, Z};
                ++rep.cond3.failures;
                rep.cond3.verified = false;
            }
        }
    }
    return rep;
}

struct BuildGResult {
    std::vector<std::uint8_t> g;
    int t = 0; // surviving palette size (>= requested t)
    int deletions = 0;
    GConditionReport report;
};

/// Alteration construction: sample red cells on a 2t palette with probability
/// t^(-2+eps), then repeatedly delete the lowest-indexed palette vertex of any
/// violating configuration until none remains. Fails if t or more deletions
/// are needed; the report re-verifies the final table.
inline BuildGResult build_g(int t, double eps, int k_max, std::uint64_t seed,
                            const VerifyGOptions& vopt = {}) {
    if (t < 8) throw BadInput("build_g: t must be at least 8");
    if (!(eps > 0.0 && eps < 1.0)) throw BadInput("build_g: eps must lie in (0,1)");
    int T = 2 * t;
    SplitMix64 rng(seed);
    double p = std::pow(static_cast<double>(t), -2.0 + eps);
    std::uint64_t thresh = prob_to_threshold(p);
    std::vector<std::uint8_t> big(static_cast<std::size_t>(T) * T * T, 0);
    for (int a = 0; a < T; ++a)
        for (int b = 0; b < T; ++b)
            for (int c = 0; c < T; ++c) {
                if (a == b || b == c || a == c) continue;
                if (rng.coin(thresh)) big[static_cast<std::size_t>((a * T + b) * T + c)] = 1;
            }

    std::vector<bool> dead(static_cast<std::size_t>(T), false);
    int deletions = 0;
    auto kill = [&](int v) {
        dead[static_cast<std::size_t>(v)] = true;
        for (int a = 0; a < T; ++a)
            for (int b = 0; b < T; ++b) {
                big[static_cast<std::size_t>((v * T + a) * T + b)] = 0;
                big[static_cast<std::size_t>((a * T + v) * T + b)] = 0;
                big[static_cast<std::size_t>((a * T + b) * T + v)] = 0;
            }
        ++deletions;
    };
    int floor_size = std::max(1, static_cast<int>(std::ceil(std::pow(static_cast<double>(t), 1.0 - eps))));

    for (;;) {
        if (deletions >= t) throw ConstructionFailed("build_g: violations reached the palette budget");
        // Permutation clashes first.
        std::map<std::array<int, 3>, std::array<int, 3>> by_sup;
        std::optional<int> victim;
        for (int a = 0; a < T && !victim; ++a)
            for (int b = 0; b < T && !victim; ++b)
                for (int c = 0; c < T && !victim; ++c) {
                    if (!big[static_cast<std::size_t>((a * T + b) * T + c)]) continue;
                    std::array<int, 3> sup{a, b, c};
                    std::sort(sup.begin(), sup.end());
                    if (!by_sup.insert({sup, {a, b, c}}).second) victim = sup[0];
                }
        if (victim) {
            kill(*victim);
            continue;
        }
        // Dense configurations.
        auto cells = detail::red_cells(big, T);
        auto viol = detail::cond2_violation(cells, k_max, vopt.cond2_budget);
        if (viol) {
            kill(viol->front());
            continue;
        }
        // Blue tripartite systems at the floor, on the surviving palette.
        std::vector<int> alive;
        for (int v = 0; v < T; ++v)
            if (!dead[static_cast<std::size_t>(v)]) alive.push_back(v);
        int ta = static_cast<int>(alive.size());
        std::vector<std::uint8_t> sub(static_cast<std::size_t>(ta) * ta * ta, 0);
        for (int a = 0; a < ta; ++a)
            for (int b = 0; b < ta; ++b)
                for (int c = 0; c < ta; ++c)
                    sub[static_cast<std::size_t>((a * ta + b) * ta + c)] =
                        big[static_cast<std::size_t>((alive[static_cast<std::size_t>(a)] * T +
                                                      alive[static_cast<std::size_t>(b)]) *
                                                         T +
                                                     alive[static_cast<std::size_t>(c)])];
        if (floor_size <= 3 && ta <= 64) {
            auto w = detail::cond3_exact_violation(sub, ta, floor_size);
            if (w) {
                int local = std::min({(*w)[0].front(), (*w)[1].front(), (*w)[2].front()});
                kill(alive[static_cast<std::size_t>(local)]);
                continue;
            }
        } else if (floor_size <= ta) {
            // Sampled detection at desk scale; misses are possible and the
            // final report says so.
            bool found = false;
            for (int it = 0; it < 200 && !found; ++it) {
                auto X = rng.subset(ta, floor_size), Y = rng.subset(ta, floor_size),
                     Z = rng.subset(ta, floor_size);
                bool all_blue = true;
                for (int x : X)
                    for (int y : Y) {
                        for (int z : Z)
                            if (sub[static_cast<std::size_t>((x * ta + y) * ta + z)]) {
                                all_blue = false;
                                break;
                            }
                        if (!all_blue) break;
                    }
                if (all_blue) {
                    kill(alive[static_cast<std::size_t>(std::min({X.front(), Y.front(), Z.front()}))]);
                    found = true;
                }
            }
            if (found) continue;
        }
        break;
    }

    BuildGResult out;
    std::vector<int> alive;
    for (int v = 0; v < T; ++v)
        if (!dead[static_cast<std::size_t>(v)]) alive.push_back(v);
    out.t = static_cast<int>(alive.size());
    out.deletions = deletions;
    out.g.assign(static_cast<std::size_t>(out.t) * out.t * out.t, 0);
    for (int a = 0; a < out.t; ++a)
        for (int b = 0; b < out.t; ++b)
            for (int c = 0; c < out.t; ++c)
                out.g[static_cast<std::size_t>((a * out.t + b) * out.t + c)] =
                    big[static_cast<std::size_t>((alive[static_cast<std::size_t>(a)] * T +
                                                  alive[static_cast<std::size_t>(b)]) *
                                                     T +
                                                 alive[static_cast<std::size_t>(c)])];
    out.report = verify_g(out.g, out.t, k_max, eps, vopt);
    return out;
}

// ---- stepping-up colorings ---------------------------------------------------

/// Highest binary digit where u and v differ.
inline int delta(std::uint64_t u, std::uint64_t v, int m) {
    if (m < 1 || m > 62) throw BadInput("delta: m out of range");
    if (u == v) throw BadInput("delta: arguments must differ");
    if (u >= (1ULL << m) || v >= (1ULL << m)) throw BadInput("delta: vertex out of range");
    return std::bit_width(u ^ v) - 1;
}

/// chi(v1,v2,v3) for v1<v2<v3 is red iff delta(v1,v2) > delta(v2,v3) and that
/// pair of bit indices is an edge of the base graph.
struct StepUpColoring {
    int m = 0;
    std::vector<std::pair<int, int>> base_edges;
    std::vector<std::uint64_t> adj; // m rows, m <= 62

    static StepUpColoring make(int m, std::vector<std::pair<int, int>> edges) {
        if (m < 1 || m > 30) throw BadInput("stepup: m out of range (host must fit in int)");
        StepUpColoring s;
        s.m = m;
        s.adj.assign(static_cast<std::size_t>(m), 0);
        for (auto& [a, b] : edges) {
            if (a == b || a < 0 || b < 0 || a >= m || b >= m) throw BadInput("stepup: bad base edge");
            if (a > b) std::swap(a, b);
            s.adj[static_cast<std::size_t>(a)] |= 1ULL << b;
            s.adj[static_cast<std::size_t>(b)] |= 1ULL << a;
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        s.base_edges = std::move(edges);
        return s;
    }

    Color chi(std::uint64_t v1, std::uint64_t v2, std::uint64_t v3) const {
        if (!(v1 < v2 && v2 < v3)) throw BadInput("stepup chi: triple must be ascending");
        int d1 = delta(v1, v2, m);
        int d2 = delta(v2, v3, m);
        bool red = d1 > d2 && ((adj[static_cast<std::size_t>(d1)] >> d2) & 1ULL);
        return red ? Color::red : Color::blue;
    }
};

class StepUpHost final : public TripleColoring {
public:
    explicit StepUpHost(StepUpColoring sc) : sc_(std::move(sc)) {}
    int size() const override { return 1 << sc_.m; }
    Color color(int u, int v, int w) const override {
        return sc_.chi(static_cast<std::uint64_t>(u), static_cast<std::uint64_t>(v),
                       static_cast<std::uint64_t>(w));
    }
    const StepUpColoring& coloring() const { return sc_; }

private:
    StepUpColoring sc_;
};

/// Longest strictly delta-increasing and delta-decreasing chain lengths over
/// subsets of the sorted vertex list A (chains are subsets, not substrings).
inline std::pair<int, int> delta_monotone_extremes(const std::vector<std::uint64_t>& a, int m) {
    int n = static_cast<int>(a.size());
    if (n == 0) return {0, 0};
    for (int i = 0; i + 1 < n; ++i)
        if (!(a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i + 1)]))
            throw BadInput("delta_monotone_extremes: list must be strictly increasing");
    if (n == 1) return {1, 1};
    // inc_pref[i][d]: longest increasing chain ending at element i whose last
    // delta is <= d; dec_suff[i][d]: decreasing, last delta >= d.
    std::vector<std::vector<int>> inc_pref(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
    std::vector<std::vector<int>> dec_suff(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m) + 1, 0));
    int best_inc = 2, best_dec = 2;
    for (int j = 0; j < n; ++j) {
        std::vector<int> inc_at(static_cast<std::size_t>(m), 0), dec_at(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < j; ++i) {
            int d = delta(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)], m);
            int ci = 2, cd = 2;
            if (d > 0) ci = std::max(ci, inc_pref[static_cast<std::size_t>(i)][static_cast<std::size_t>(d - 1)] + 1);
            if (d + 1 <= m) cd = std::max(cd, dec_suff[static_cast<std::size_t>(i)][static_cast<std::size_t>(d + 1)] + 1);
            inc_at[static_cast<std::size_t>(d)] = std::max(inc_at[static_cast<std::size_t>(d)], ci);
            dec_at[static_cast<std::size_t>(d)] = std::max(dec_at[static_cast<std::size_t>(d)], cd);
        }
        for (int d = 0; d < m; ++d) {
            best_inc = std::max(best_inc, inc_at[static_cast<std::size_t>(d)]);
            best_dec = std::max(best_dec, dec_at[static_cast<std::size_t>(d)]);
        }
        for (int d = 0; d <= m; ++d) {
            inc_pref[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] =
                std::max(d > 0 ? inc_pref[static_cast<std::size_t>(j)][static_cast<std::size_t>(d - 1)] : 0,
                         d < m ? inc_at[static_cast<std::size_t>(d)] : 0);
        }
        for (int d = m; d >= 0; --d) {
            dec_suff[static_cast<std::size_t>(j)][static_cast<std::size_t>(d)] =
                std::max(d < m ? dec_suff[static_cast<std::size_t>(j)][static_cast<std::size_t>(d + 1)] : 0,
                         d < m ? dec_at[static_cast<std::size_t>(d)] : 0);
        }
    }
    return {best_inc, best_dec};
}

// ---- JSON containers ---------------------------------------------------------

namespace detail {

inline std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
    static const char* k = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    std::string out;
    for (std::size_t i = 0; i < bytes.size(); i += 3) {
        std::uint32_t v = bytes[i] << 16;
        int have = 1;
        if (i + 1 < bytes.size()) { v |= bytes[i + 1] << 8; ++have; }
        if (i + 2 < bytes.size()) { v |= bytes[i + 2]; ++have; }
        out.push_back(k[(v >> 18) & 63]);
        out.push_back(k[(v >> 12) & 63]);
        out.push_back(have > 1 ? k[(v >> 6) & 63] : '=');
        out.push_back(have > 2 ? k[v & 63] : '=');
    }
    return out;
}

inline std::vector<std::uint8_t> base64_decode(const std::string& s) {
    auto val = [](char ch) -> int {
        if (ch >= 'A' && ch <= 'Z') return ch - 'A';
        if (ch >= 'a' && ch <= 'z') return ch - 'a' + 26;
        if (ch >= '0' && ch <= '9') return ch - '0' + 52;
        if (ch == '+') return 62;
        if (ch == '/') return 63;
        if (ch == '=') return -1;
        throw BadInput("bad base64 character");
    };
    if (s.size() % 4 != 0) throw BadInput("bad base64 length");
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < s.size(); i += 4) {
        int a = val(s[i]), b = val(s[i + 1]), c = val(s[i + 2]), d = val(s[i + 3]);
        if (a < 0 || b < 0) throw BadInput("bad base64 padding");
        std::uint32_t v = (static_cast<std::uint32_t>(a) << 18) | (static_cast<std::uint32_t>(b) << 12) |
                          ((c < 0 ? 0u : static_cast<std::uint32_t>(c)) << 6) |
                          (d < 0 ? 0u : static_cast<std::uint32_t>(d));
        out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
        if (c >= 0) out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
        if (d >= 0) out.push_back(static_cast<std::uint8_t>(v & 0xff));
    }
    return out;
}

inline std::vector<std::uint8_t> pack_bits(const std::vector<std::uint8_t>& cells) {
    std::vector<std::uint8_t> out((cells.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i]) out[i >> 3] |= static_cast<std::uint8_t>(1u << (i & 7));
    return out;
}

inline std::vector<std::uint8_t> unpack_bits(const std::vector<std::uint8_t>& bytes, std::size_t n) {
    if (bytes.size() != (n + 7) / 8) throw BadInput("bit table length mismatch");
    std::vector<std::uint8_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) out[i] = (bytes[i >> 3] >> (i & 7)) & 1u;
    return out;
}

} // namespace detail

inline nlohmann::json coloring_to_json(const PairConstruction& pc) {
    nlohmann::json j;
    j["type"] = "pair";
    j["N"] = pc.N;
    j["t"] = pc.t;
    j["seed"] = pc.seed;
    j["f"] = pc.f;
    j["g"] = detail::base64_encode(detail::pack_bits(pc.g));
    return j;
}

inline nlohmann::json coloring_to_json(const StepUpColoring& sc) {
    nlohmann::json j;
    j["type"] = "stepup";
    j["m"] = sc.m;
    nlohmann::json es = nlohmann::json::array();
    for (auto [a, b] : sc.base_edges) es.push_back({a, b});
    j["graph_edges"] = es;
    return j;
}

/// Loads either container type as a host coloring.
inline std::unique_ptr<TripleColoring> coloring_from_json(const nlohmann::json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "pair") {
        PairConstruction pc;
        pc.N = j.at("N").get<int>();
        pc.t = j.at("t").get<int>();
        pc.seed = j.value("seed", 0ULL);
        pc.f = j.at("f").get<std::vector<std::uint8_t>>();
        if (pc.N < 2 || pc.t < 1) throw BadInput("pair container: bad sizes");
        if (pc.f.size() != static_cast<std::size_t>(pc.N) * (pc.N - 1) / 2)
            throw BadInput("pair container: f table size mismatch");
        for (auto v : pc.f)
            if (v >= pc.t) throw BadInput("pair container: f value out of palette");
        pc.g = detail::unpack_bits(detail::base64_decode(j.at("g").get<std::string>()),
                                   static_cast<std::size_t>(pc.t) * pc.t * pc.t);
        return std::make_unique<PairHost>(std::move(pc));
    }
    if (type == "stepup") {
        int m = j.at("m").get<int>();
        std::vector<std::pair<int, int>> es;
        for (const auto& e : j.at("graph_edges")) es.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return std::make_unique<StepUpHost>(StepUpColoring::make(m, std::move(es)));
    }
    throw BadInput("unknown coloring container type: " + type);
}

} // namespace h3lab
