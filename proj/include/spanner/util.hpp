#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace spanner {

/// splitmix64: seedable, portable 64-bit generator.  Fixtures depend on
/// its exact output sequence, so the algorithm is pinned here.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

/// Worker cap for internal parallel sweeps: min(hardware, SPANNER_THREADS).
unsigned max_threads();

/// Runs fn(begin, end) over [0, n) in contiguous chunks, possibly from
/// several threads.  Chunk boundaries are deterministic; callers write
/// to disjoint preallocated slots so results never depend on schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace spanner
