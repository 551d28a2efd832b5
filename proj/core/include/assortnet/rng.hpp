#pragma once

#include <cstdint>
#include <random>

namespace assortnet {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream derived from (seed, stream). Used to make parallel
// replicates/runs deterministic regardless of worker count.
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = splitmix64(seed ^ splitmix64(stream));
    return Rng(s);
}

}  // namespace assortnet
