#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "twinga/random.hpp"

namespace twinga {
namespace {

TEST(Rng, SameSeedSameStream) {
    Rng a(123), b(123);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next(), b.next());
}

TEST(Rng, EngineIsStandardMt19937_64) {
    // The 10000th output of a default-seeded mt19937_64 is fixed by the standard.
    Rng r(5489u);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = r.next();
    EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(Rng, UniformIndexStaysInRange) {
    Rng r(7);
    for (std::size_t n : {1u, 2u, 3u, 7u, 40u, 1000u})
        for (int i = 0; i < 2000; ++i) ASSERT_LT(r.uniform_index(n), n);
}

TEST(Rng, Uniform01HalfOpen) {
    Rng r(9);
    for (int i = 0; i < 100000; ++i) {
        const double u = r.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Rng, DerivedSeedsDiffer) {
    std::set<std::uint64_t> seeds;
    for (std::uint64_t master : {0ULL, 1ULL, 42ULL})
        for (std::uint64_t t = 0; t < 100; ++t) seeds.insert(derive_seed(master, t));
    EXPECT_EQ(seeds.size(), 300u);
    EXPECT_EQ(derive_seed(42, 3), derive_seed(42, 3));
}

TEST(Rng, SplitMixReferenceValue) {
    // First output of the reference SplitMix64 generator seeded with 0.
    EXPECT_EQ(splitmix64(0), 0xE220A8397B1DCDAFULL);
}

}  // namespace
}  // namespace twinga
