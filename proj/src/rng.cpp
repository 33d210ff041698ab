#include "qsearch/rng.hpp"

namespace qsearch {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kStreamStep = 0xD1B54A32D192ED03ull;
}

std::uint64_t mix64(std::uint64_t x) {
    x += kGamma;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::next() {
    state += kGamma;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64::next_pow2(int bits) {
    return next() >> (64 - bits);
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64{mix64(mix64(seed) + kStreamStep * index)};
}

}  // namespace qsearch
