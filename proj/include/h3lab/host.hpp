#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace h3lab {

enum class Color : std::uint8_t { red, blue };

/// Total two-coloring of the ascending triples of [0, N). Implementations
/// must be pure: same triple, same answer.
class TripleColoring {
public:
    virtual ~TripleColoring() = default;
    virtual int size() const = 0;
    /// Requires u < v < w.
    virtual Color color(int u, int v, int w) const = 0;
};

namespace detail {

inline std::int64_t binom(std::int64_t n, int k) {
    if (n < k) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Colexicographic rank of the ascending triple (u,v,w) within [0, C(N,3)).
inline std::int64_t triple_rank(int u, int v, int w) {
    return binom(w, 3) + binom(v, 2) + u;
}

} // namespace detail

/// Concrete coloring backed by a bitset over triple ranks (bit set = red).
class ExplicitColoring final : public TripleColoring {
public:
    ExplicitColoring(int n, Color fill = Color::blue)
        : n_(n), bits_(static_cast<std::size_t>((detail::binom(n, 3) + 63) / 64),
                       fill == Color::red ? ~0ULL : 0ULL) {}

    static ExplicitColoring materialize(const TripleColoring& src) {
        ExplicitColoring out(src.size());
        for (int w = 2; w < src.size(); ++w)
            for (int v = 1; v < w; ++v)
                for (int u = 0; u < v; ++u)
                    if (src.color(u, v, w) == Color::red) out.set(u, v, w, Color::red);
        return out;
    }

    int size() const override { return n_; }
    Color color(int u, int v, int w) const override {
        check(u, v, w);
        std::int64_t r = detail::triple_rank(u, v, w);
        bool red = (bits_[static_cast<std::size_t>(r >> 6)] >> (r & 63)) & 1ULL;
        return red ? Color::red : Color::blue;
    }
    void set(int u, int v, int w, Color c) {
        check(u, v, w);
        std::int64_t r = detail::triple_rank(u, v, w);
        std::uint64_t bit = 1ULL << (r & 63);
        if (c == Color::red)
            bits_[static_cast<std::size_t>(r >> 6)] |= bit;
        else
            bits_[static_cast<std::size_t>(r >> 6)] &= ~bit;
    }

private:
    void check(int u, int v, int w) const {
        if (!(0 <= u && u < v && v < w && w < n_))
            throw std::invalid_argument("triple must be ascending and in range");
    }
    int n_;
    std::vector<std::uint64_t> bits_;
};

/// Adapter for ad-hoc colorings in tests.
class FnColoring final : public TripleColoring {
public:
    FnColoring(int n, std::function<Color(int, int, int)> fn) : n_(n), fn_(std::move(fn)) {}
    int size() const override { return n_; }
    Color color(int u, int v, int w) const override { return fn_(u, v, w); }

private:
    int n_;
    std::function<Color(int, int, int)> fn_;
};

} // namespace h3lab
