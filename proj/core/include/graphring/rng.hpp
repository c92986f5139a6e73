#pragma once

#include <cstdint>

namespace graphring {

// SplitMix64. Used instead of <random> engines so that seeded streams are
// identical across platforms and standard library versions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform in [1, bound] with a uniform random sign.
    long long nonzero(long long bound) {
        long long v = range(1, bound);
        return coin() ? v : -v;
    }

    bool coin() { return next() >> 63; }

private:
    std::uint64_t state_;
};

}  // namespace graphring
