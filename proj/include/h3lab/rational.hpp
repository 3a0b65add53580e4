#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace h3lab {

// Exact nonnegative rational, always in lowest terms. Density thresholds
// (1/3 vs 1/2) are exact claims, so no floating point anywhere near them.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t a = num < 0 ? -num : num;
        std::int64_t g = std::gcd(a, den);
        if (g > 1) { num /= g; den /= g; }
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
    }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
    friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }
};

} // namespace h3lab
