#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace h3lab {

// SplitMix64. Fixed-width arithmetic only, so a given seed yields the same
// stream on every platform; all randomized operations in the library draw
// from this and document their draw order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased bounded draw (Lemire rejection).
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        for (;;) {
            std::uint64_t x = next();
            unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
            std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (0 - bound) % bound) return static_cast<std::uint64_t>(m >> 64);
        }
    }

    // Bernoulli with a 64-bit fixed-point threshold: true iff next() < threshold.
    bool coin(std::uint64_t threshold) { return next() < threshold; }

    // Uniform k-subset of [0, n), ascending. Floyd's algorithm, deterministic
    // draw order.
    std::vector<int> subset(int n, int k);

private:
    std::uint64_t state_;
};

inline std::vector<int> SplitMix64::subset(int n, int k) {
    std::vector<int> out;
    out.reserve(k);
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int j = n - k; j < n; ++j) {
        int r = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
        if (in[static_cast<std::size_t>(r)]) {
            in[static_cast<std::size_t>(j)] = true;
            out.push_back(j);
        } else {
            in[static_cast<std::size_t>(r)] = true;
            out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Converts a probability in [0,1] to the 64-bit threshold used by coin().
inline std::uint64_t prob_to_threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return ~0ULL;
    return static_cast<std::uint64_t>(p * 18446744073709551616.0);
}

} // namespace h3lab
