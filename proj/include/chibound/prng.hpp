#pragma once

#include <cstdint>

namespace chibound {

// Counter-based PRNG: output i is a pure function of (key, i), so generators
// can be forked per instance and replayed bit-exactly on any platform.
// The mixer is the splitmix64 finalizer.
class counter_rng {
public:
    explicit counter_rng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(seed + 0x9e3779b97f4a7c15ull * (stream + 1))) {}

    std::uint64_t next() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

    // 53-bit mantissa in [0,1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Unbiased uniform draw in [0, n) via rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    counter_rng fork(std::uint64_t stream) const { return counter_rng(key_, stream + 1); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ull;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace chibound
