#ifndef DEGCHROM_RNG_HPP
#define DEGCHROM_RNG_HPP

#include <cassert>
#include <cstdint>

namespace degchrom {

// splitmix64. Deterministic across platforms and compilers, which is what
// makes campaign output reproducible byte for byte from a seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        assert(bound > 0);
        const std::uint64_t rem = (UINT64_MAX % bound + 1) % bound;  // 2^64 mod bound
        if (rem == 0) return next() % bound;
        const std::uint64_t limit = 0 - rem;
        std::uint64_t x = next();
        while (x >= limit) x = next();
        return x % bound;
    }

    // Derive an independent substream.
    SplitMix64 split() noexcept { return SplitMix64(next()); }

  private:
    std::uint64_t state_;
};

}  // namespace degchrom

#endif
