#include <gtest/gtest.h>

#include <algorithm>
#include <stdexcept>

#include "hetnet/traffic.hpp"

using namespace hetnet;

TEST(Traffic, DefaultProfileMatchesStudyVectors) {
    const auto p = default_profile();
    ASSERT_EQ(p.hours(), 9u);
    EXPECT_EQ(p.macro_means.front(), 197);
    EXPECT_EQ(p.hotspot_means.back(), 65);
    EXPECT_DOUBLE_EQ(p.fluctuation_fraction, 0.2);
    EXPECT_NO_THROW(validate(p));
}

TEST(Traffic, NoFluctuationIsDeterministic) {
    auto p = default_profile();
    p.fluctuation_fraction = 0.0;
    RandomEngine rng(1);
    for (int i = 0; i < 5; ++i) {
        const auto c = user_counts(p, 0, rng);
        EXPECT_EQ(c.n_macro, 197u);
        EXPECT_EQ(c.n_hotspot, 1u);
        EXPECT_EQ(c.hour, 0u);
    }
}

TEST(Traffic, CountsAreClampedAtZero) {
    EXPECT_EQ(fluctuated_count(5.0, -7), 0u);
    EXPECT_EQ(fluctuated_count(5.0, -5), 0u);
    EXPECT_EQ(fluctuated_count(5.0, 3), 8u);
}

TEST(Traffic, FluctuationIsZeroMeanWithExactSupport) {
    TrafficProfile p{{100}, {0}, 0.2};
    RandomEngine rng(42);
    double total = 0.0;
    std::size_t lo = 1000;
    std::size_t hi = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        const auto c = user_counts(p, 0, rng);
        total += static_cast<double>(c.n_macro);
        lo = std::min(lo, c.n_macro);
        hi = std::max(hi, c.n_macro);
        EXPECT_EQ(c.n_hotspot, 0u);
    }
    EXPECT_NEAR(total / draws, 100.0, 0.5);
    EXPECT_EQ(lo, 80u);
    EXPECT_EQ(hi, 120u);
}

TEST(Traffic, RejectsBadProfiles) {
    EXPECT_THROW(validate(TrafficProfile{{1, 2}, {1}, 0.2}), std::invalid_argument);
    EXPECT_THROW(validate(TrafficProfile{{}, {}, 0.2}), std::invalid_argument);
    EXPECT_THROW(validate(TrafficProfile{{-1}, {1}, 0.2}), std::invalid_argument);
    EXPECT_THROW(validate(TrafficProfile{{1}, {1}, 1.0}), std::invalid_argument);
}

TEST(Traffic, HourOutOfRange) {
    RandomEngine rng(0);
    EXPECT_THROW(user_counts(default_profile(), 9, rng), std::out_of_range);
}
