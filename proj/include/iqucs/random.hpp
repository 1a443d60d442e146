#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <vector>

namespace iqucs::rng {

// SplitMix64 finalizer (Steele/Lea/Flood). Used to derive independent,
// reproducible seeds from (seed, tag, iteration, ...) tuples.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    for (std::uint64_t p : parts) {
        h = splitmix64(h ^ p);
    }
    return h;
}

// Maps raw engine output to [0, 1). std::uniform_real_distribution is not
// bit-reproducible across standard libraries; this mapping is.
inline double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n) via rejection.
inline std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("bounded: n must be positive");
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = eng();
    while (x >= limit) {
        x = eng();
    }
    return x % n;
}

// First k entries of a seeded Fisher-Yates shuffle of {0, ..., n-1}.
inline std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n, std::uint64_t k,
                                                             std::uint64_t seed) {
    if (k > n) {
        throw std::invalid_argument("sample_without_replacement: k exceeds population");
    }
    std::vector<std::uint64_t> pool(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        pool[i] = i;
    }
    std::mt19937_64 eng(seed);
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t j = i + bounded(eng, n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

} // namespace iqucs::rng
