#ifndef CLIFFPAR_RANDOM_HPP
#define CLIFFPAR_RANDOM_HPP

#include <cstdint>
#include <random>

namespace cliffpar {

/// Seeded generator shared by every property check.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard (seed via the single-integer constructor, default constants).
/// Bounded draws use rejection sampling on the raw 64-bit output rather than
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
/// Together this makes every sample stream reproducible across toolchains.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return lo + static_cast<std::int64_t>(r % span);
    }

    bool coin() { return (next() >> 63) != 0; }

    /// Derives an independent stream, e.g. one per property.
    SeededRng fork(std::uint64_t salt) {
        return SeededRng(next() ^ (salt * 0x9E3779B97F4A7C15ULL));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cliffpar

#endif
