#pragma once

#include <cstdint>

namespace lieva {

// Deterministic splitmix64 stream. The same seed yields the same sequence on
// every platform; nothing in the library reads ambient entropy.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) via rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~0ULL / bound);
        std::uint64_t r = next();
        while (r >= limit) r = next();
        return r % bound;
    }

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform in [0, 1) with 53 significant bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double in(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::uint64_t state_;
};

} // namespace lieva
