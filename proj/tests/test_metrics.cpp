#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hetnet/metrics.hpp"

using namespace hetnet;

namespace {

MetricsRecord record(double sum, double median, double p10, double power) {
    MetricsRecord r;
    r.scenario = "X";
    r.sum_rate_bps = sum;
    r.median_rate_bps = median;
    r.p10_rate_bps = p10;
    r.power_w = power;
    return r;
}

}  // namespace

TEST(Percentile, Examples) {
    const std::vector<double> one_to_ten{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    EXPECT_DOUBLE_EQ(percentile(one_to_ten, 0.5), 5.5);
    const std::vector<double> tens{100, 90, 80, 70, 60, 50, 40, 30, 20, 10};
    EXPECT_DOUBLE_EQ(percentile(tens, 0.1), 19.0);
    const std::vector<double> single{42.0};
    for (double p : {0.0, 0.1, 0.5, 1.0}) EXPECT_EQ(percentile(single, p), 42.0);
    EXPECT_THROW(percentile(std::vector<double>{}, 0.5), std::invalid_argument);
    EXPECT_THROW(percentile(one_to_ten, 1.5), std::invalid_argument);
}

TEST(Percentile, MonotoneInFractionAndPermutationInvariant) {
    std::mt19937_64 rng(5);
    std::lognormal_distribution<double> dist(16.0, 1.0);
    std::vector<double> v(137);
    for (auto& x : v) x = dist(rng);
    double previous = percentile(v, 0.0);
    for (int i = 1; i <= 100; ++i) {
        const double q = percentile(v, i / 100.0);
        EXPECT_GE(q, previous);
        previous = q;
    }
    auto shuffled = v;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (double p : {0.1, 0.5, 0.9}) EXPECT_EQ(percentile(v, p), percentile(shuffled, p));
}

TEST(DropMetrics, TwoUsers) {
    StateEvaluation e;
    e.rate_bps = {10e6, 30e6};
    e.network_power_w = 1173.0;
    const auto r = drop_metrics(e, 3, 4, "MO-PFS");
    EXPECT_DOUBLE_EQ(r.sum_rate_bps, 40e6);
    EXPECT_DOUBLE_EQ(r.median_rate_bps, 20e6);
    EXPECT_DOUBLE_EQ(r.p10_rate_bps, 12e6);
    EXPECT_EQ(r.power_w, 1173.0);
    EXPECT_EQ(r.hour, 3u);
    EXPECT_EQ(r.drop, 4u);
    EXPECT_FALSE(r.empty_drop);
}

TEST(DropMetrics, EmptyDropIsFlagged) {
    StateEvaluation e;
    e.network_power_w = 1170.0;
    const auto r = drop_metrics(e, 1, 0, "MO-EA");
    EXPECT_TRUE(r.empty_drop);
    EXPECT_EQ(r.sum_rate_bps, 0.0);
    EXPECT_EQ(r.p10_rate_bps, 0.0);
    EXPECT_EQ(r.power_w, 1170.0);
}

TEST(Aggregate, Examples) {
    const auto same = record(100e6, 10e6, 5e6, 1197.0);
    const std::vector<MetricsRecord> identical{same, same, same};
    const auto s = aggregate(identical);
    EXPECT_EQ(s.avg_sum_rate_bps, 100e6);
    EXPECT_EQ(s.avg_p10_rate_bps, 5e6);
    EXPECT_EQ(s.records, 3u);
    EXPECT_NEAR(s.energy_per_sum * 1e6, 11.97, 1e-12);  // W per Mbit/s

    const std::vector<MetricsRecord> two{record(1, 1, 1, 1170.0), record(1, 1, 1, 1224.0)};
    EXPECT_DOUBLE_EQ(aggregate(two).avg_power_w, 1197.0);
    EXPECT_THROW(aggregate(std::vector<MetricsRecord>{}), std::invalid_argument);
}

TEST(Aggregate, OrderIndependentBitForBit) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(1e6, 1e9);
    std::vector<MetricsRecord> recs;
    for (int i = 0; i < 200; ++i) recs.push_back(record(u(rng), u(rng), u(rng), u(rng)));
    const auto a = aggregate(recs);
    std::shuffle(recs.begin(), recs.end(), rng);
    const auto b = aggregate(recs);
    EXPECT_EQ(a.avg_sum_rate_bps, b.avg_sum_rate_bps);
    EXPECT_EQ(a.avg_median_rate_bps, b.avg_median_rate_bps);
    EXPECT_EQ(a.avg_p10_rate_bps, b.avg_p10_rate_bps);
    EXPECT_EQ(a.avg_power_w, b.avg_power_w);
}

TEST(ImprovementTable, SignConvention) {
    ScenarioSummary base;
    base.scenario = "MO-EA";
    base.energy_per_sum = 10.0;
    base.energy_per_median = 10.0;
    base.energy_per_p10 = 10.0;
    ScenarioSummary dbada = base;
    dbada.scenario = "DBADA-b0.5";
    dbada.energy_per_sum = 9.0;
    dbada.energy_per_p10 = 10.4;
    const std::vector<ScenarioSummary> baselines{base};
    const auto rows = improvement_table(dbada, baselines);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(rows[0].energy_per_sum_pct, 10.0, 1e-12);
    EXPECT_NEAR(rows[0].energy_per_median_pct, 0.0, 1e-12);
    EXPECT_NEAR(rows[0].energy_per_p10_pct, -4.0, 1e-12);
    EXPECT_EQ(rows[0].baseline, "MO-EA");
}

TEST(ImprovementTable, IdentityIsZeroAndZeroBaselineThrows) {
    ScenarioSummary x;
    x.energy_per_sum = 3.3e-6;
    x.energy_per_median = 7.1e-5;
    x.energy_per_p10 = 1.2e-4;
    const std::vector<ScenarioSummary> self{x};
    for (const auto& r : improvement_table(x, self)) {
        EXPECT_EQ(r.energy_per_sum_pct, 0.0);
        EXPECT_EQ(r.energy_per_median_pct, 0.0);
        EXPECT_EQ(r.energy_per_p10_pct, 0.0);
    }
    ScenarioSummary zero = x;
    zero.energy_per_median = 0.0;
    const std::vector<ScenarioSummary> bad{zero};
    EXPECT_THROW(improvement_table(x, bad), std::domain_error);
}
