#pragma once

// Deterministic test-corpus generation. The generator is splitmix64 (Steele,
// Lea & Flood's 64-bit finalizer-based generator): tiny, fully specified, and
// identical on every platform, unlike std::uniform_int_distribution. Streams
// are split by index, so trial r of a seeded run draws the same values no
// matter what order trials execute in.

#include <cstdint>
#include <vector>

#include "fangcheng/ring.hpp"
#include "fangcheng/tableau.hpp"

namespace fangcheng {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform on [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

// Independent stream for (seed, index).
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mixer(seed);
    return SplitMix64(mixer.next() + index * 0x9e3779b97f4a7c15ULL);
}

struct DrawStats {
    std::uint64_t resamples = 0; // discarded singular / strict-unsafe draws
};

// n x m board with entries uniform on [-range, range]; all-zero rows are
// redrawn.
Tableau<Integer> random_tableau(SplitMix64& rng, int n, int m, int range, int rhs_cols = 0);

// Augmented nonsingular system (det != 0), resampling singular draws.
Tableau<Integer> random_nonsingular_system(SplitMix64& rng, int n, int range,
                                           DrawStats* stats = nullptr);

// Augmented system with every leading principal minor nonzero, so strict
// elimination is safe for all strategies.
Tableau<Integer> random_strongly_nonsingular_system(SplitMix64& rng, int n, int range,
                                                    DrawStats* stats = nullptr);

// Square matrix variant of the strong draw (no right-hand side).
Tableau<Integer> random_strongly_nonsingular_matrix(SplitMix64& rng, int n, int range,
                                                    DrawStats* stats = nullptr);

} // namespace fangcheng
