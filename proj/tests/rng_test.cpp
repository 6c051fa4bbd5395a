#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "seedga/rng.hpp"

using seedga::Rng;

TEST(Rng, SameSeedSameStream) {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(a.next(), b.next());
    }
}

TEST(Rng, DifferentSeedsDiverge) {
    Rng a(1);
    Rng b(2);
    int equal = 0;
    for (int i = 0; i < 100; ++i) {
        equal += a.next() == b.next();
    }
    EXPECT_EQ(equal, 0);
}

// Pinned so that logged runs stay reproducible across versions.
TEST(Rng, StreamIsPinned) {
    Rng rng(0);
    const std::array<std::uint64_t, 3> first{rng.next(), rng.next(), rng.next()};
    Rng again(0);
    EXPECT_EQ(again.next(), first[0]);
    EXPECT_EQ(first[0], 0x99ec5f36cb75f2b4ULL);
    EXPECT_EQ(first[1], 0xbf6e1f784956452aULL);
    EXPECT_EQ(first[2], 0x1a5f849d4933e6e0ULL);
}

TEST(Rng, BelowStaysInRangeAndCoversIt) {
    Rng rng(7);
    std::array<int, 7> counts{};
    for (int i = 0; i < 70000; ++i) {
        const auto v = rng.below(7);
        ASSERT_LT(v, 7u);
        ++counts[v];
    }
    for (int c : counts) {
        EXPECT_NEAR(c / 70000.0, 1.0 / 7, 0.01);
    }
}

TEST(Rng, BelowOneIsZero) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        EXPECT_EQ(rng.below(1), 0u);
    }
}

TEST(Rng, UnitInHalfOpenInterval) {
    Rng rng(11);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}
