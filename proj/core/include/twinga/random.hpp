#pragma once

/// @file random.hpp
/// @brief Seedable random stream with a pinned algorithm.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The library never uses std:: distributions (their algorithms are
/// implementation defined); bounded integers use rejection sampling on the
/// raw 64-bit output and reals use the top 53 bits. Together this makes every
/// run bit-reproducible across standard libraries.
///
/// Per-trial streams are derived from (master_seed, trial_index) with the
/// SplitMix64 finalizer, so trial i gets the same stream whether trials run
/// serially or in parallel.

#include <cstddef>
#include <cstdint>
#include <random>

namespace twinga {

/// SplitMix64 output function (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for the stream of trial `trial_index` under `master_seed`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n);

    /// Uniform real in [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bit() { return (next() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace twinga
