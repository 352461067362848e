#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hetnet/scenarios.hpp"

namespace hetnet {

struct MetricsRecord {
    std::size_t hour = 0;  // 1-based hour of the traffic profile
    std::size_t drop = 0;
    std::string scenario;
    double sum_rate_bps = 0.0;
    double median_rate_bps = 0.0;
    double p10_rate_bps = 0.0;
    double power_w = 0.0;
    std::size_t users = 0;
    bool empty_drop = false;  // no users; rates recorded as zero
};

struct ScenarioSummary {
    std::string scenario;
    std::size_t records = 0;
    double avg_sum_rate_bps = 0.0;
    double avg_median_rate_bps = 0.0;
    double avg_p10_rate_bps = 0.0;
    double avg_power_w = 0.0;
    // Ratio of averages: avg_power_w / avg_X_rate, in W per bit/s.
    double energy_per_sum = 0.0;
    double energy_per_median = 0.0;
    double energy_per_p10 = 0.0;
};

struct ImprovementRow {
    std::string dbada;
    std::string baseline;
    double energy_per_sum_pct = 0.0;
    double energy_per_median_pct = 0.0;
    double energy_per_p10_pct = 0.0;
};

/// Linear-interpolation percentile: rank 1 + p (M - 1) on the sorted sample.
double percentile(std::span<const double> values, double p);

MetricsRecord drop_metrics(const StateEvaluation& evaluation, std::size_t hour, std::size_t drop,
                           const std::string& label);

/// Means over the records of one scenario. Throws on an empty list or mixed labels.
ScenarioSummary aggregate(std::span<const MetricsRecord> records);

/// 100 * (baseline - dbada) / baseline for each energy-per-rate metric.
/// Throws std::domain_error when a baseline metric is zero.
std::vector<ImprovementRow> improvement_table(const ScenarioSummary& dbada,
                                              std::span<const ScenarioSummary> baselines);

}  // namespace hetnet
