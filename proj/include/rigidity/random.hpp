#pragma once

#include <cstdint>
#include <random>

namespace rigidity {

/// SplitMix64 finalizer; derives independent sub-seeds from one 64-bit seed.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/**
 * Seeded generator whose output is fixed by the C++ standard (mt19937_64), with
 * its own range reductions so corpora are bit-reproducible across standard
 * libraries (std::uniform_*_distribution is implementation-defined).
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x = engine_();
        while (x >= limit) {
            x = engine_();
        }
        return x % bound;
    }

    int index(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace rigidity
