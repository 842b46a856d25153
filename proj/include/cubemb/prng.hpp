#pragma once

// Deterministic seed derivation. Parallel work derives per-worker seeds from
// the root seed with splitmix64: worker w receives the (w+1)-th output of the
// stream seeded at the root. Engines are std::mt19937_64, whose output
// sequence is fixed by the standard, so runs are reproducible across
// platforms.

#include <cstdint>

namespace cubemb {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t worker_seed(std::uint64_t root_seed, int worker) {
    std::uint64_t state = root_seed;
    std::uint64_t out = 0;
    for (int i = 0; i <= worker; ++i) out = splitmix64_next(state);
    return out;
}

}  // namespace cubemb
