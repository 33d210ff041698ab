#pragma once

#include <cstdint>

namespace qsearch {

// Finalizer of the SplitMix64 generator; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

// SplitMix64: the state is a plain counter, so substreams are exact jumps
// and the generator is identical on every platform (no library distribution
// objects are used anywhere in the sampling paths).
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next();

    // 53-bit uniform in [0, 1)
    double uniform01();

    // unbiased draw from [0, 2^bits); relies on power-of-two range
    std::uint64_t next_pow2(int bits);
};

// One substream per index: state = mix64(mix64(seed) + index * odd constant).
// Distinct indices land on scrambled, widely separated counter values, so
// partitioning work by index across threads cannot change any draw.
SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

}  // namespace qsearch
