#pragma once

#include <cstdint>
#include <random>

namespace fdso {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a root seed. Every component of a
// build pulls its randomness through this, so one config seed reproduces the
// whole artifact.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream, std::uint64_t salt = 0) {
    return splitmix64(splitmix64(root ^ 0x6a09e667f3bcc909ULL) + splitmix64(stream) + salt);
}

// mt19937_64 wrapper with pinned draw logic (no std::*_distribution, whose
// output differs across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    bool bernoulli(double prob) { return uniform01() < prob; }

private:
    std::mt19937_64 eng_;
};

}  // namespace fdso
