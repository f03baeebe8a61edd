#include "twinga/random.hpp"

#include <cassert>

namespace twinga {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t trial_index) noexcept {
    return splitmix64(splitmix64(master_seed) ^ splitmix64(~trial_index));
}

std::size_t Rng::uniform_index(std::size_t n) {
    assert(n > 0);
    const auto bound = static_cast<std::uint64_t>(n);
    // Reject the low (2^64 mod n) values so the modulo is unbiased.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x >= threshold) return static_cast<std::size_t>(x % bound);
    }
}

}  // namespace twinga
