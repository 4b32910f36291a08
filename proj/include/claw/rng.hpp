#pragma once

#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

namespace claw {

/// Stateless splitmix64 hash step. Used wherever a reproducible stream of
/// pseudo-random values has to be derived from (seed, index) pairs without
/// carrying RNG state around.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Combine a seed with one or two stream indices into a fresh hash.
inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(seed ^ (a * 0x9e3779b97f4a7c15ull)) ^ b);
}

/// Map a 64-bit hash to a double in [0, 1).
inline double uniform01(std::uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Radical-inverse (van der Corput) value of index i in the given base.
inline double radical_inverse(std::uint64_t i, std::uint32_t base) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

/// Low-discrepancy Halton point in [0,1)^dim for sample `index`, shifted by a
/// deterministic per-seed Cranley-Patterson rotation so distinct seeds give
/// distinct but reproducible sequences.
inline std::vector<double> halton_point(std::uint64_t index, int dim, std::uint64_t seed) {
    static constexpr std::uint32_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    std::vector<double> p(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        double shift = uniform01(hash_combine(seed, 0xCAFEu, static_cast<std::uint64_t>(j)));
        double v = radical_inverse(index + 1, primes[j % 10]) + shift;
        p[static_cast<std::size_t>(j)] = v - static_cast<double>(static_cast<std::int64_t>(v));
    }
    return p;
}

} // namespace claw
