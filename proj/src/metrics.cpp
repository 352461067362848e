#include "hetnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetnet {

double percentile(std::span<const double> values, double p) {
    if (values.empty()) {
        throw std::invalid_argument("percentile of an empty sample");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("percentile fraction must lie in [0, 1]");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = p * static_cast<double>(sorted.size() - 1);  // 0-based rank
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

MetricsRecord drop_metrics(const StateEvaluation& evaluation, std::size_t hour, std::size_t drop,
                           const std::string& label) {
    MetricsRecord r;
    r.hour = hour;
    r.drop = drop;
    r.scenario = label;
    r.power_w = evaluation.network_power_w;
    r.users = evaluation.users();
    if (evaluation.rate_bps.empty()) {
        r.empty_drop = true;
        return r;
    }
    for (double rate : evaluation.rate_bps) {
        r.sum_rate_bps += rate;
    }
    r.median_rate_bps = percentile(evaluation.rate_bps, 0.5);
    r.p10_rate_bps = percentile(evaluation.rate_bps, 0.1);
    return r;
}

namespace {

// Sorting first makes the mean independent of record order, bit for bit.
double order_free_mean(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double total = 0.0;
    for (double v : values) {
        total += v;
    }
    return total / static_cast<double>(values.size());
}

}  // namespace

ScenarioSummary aggregate(std::span<const MetricsRecord> records) {
    if (records.empty()) {
        throw std::invalid_argument("aggregate needs at least one record");
    }
    ScenarioSummary s;
    s.scenario = records.front().scenario;
    std::vector<double> sum, median, p10, power;
    for (const auto& r : records) {
        if (r.scenario != s.scenario) {
            throw std::invalid_argument("aggregate over mixed scenarios");
        }
        sum.push_back(r.sum_rate_bps);
        median.push_back(r.median_rate_bps);
        p10.push_back(r.p10_rate_bps);
        power.push_back(r.power_w);
    }
    s.records = records.size();
    s.avg_sum_rate_bps = order_free_mean(std::move(sum));
    s.avg_median_rate_bps = order_free_mean(std::move(median));
    s.avg_p10_rate_bps = order_free_mean(std::move(p10));
    s.avg_power_w = order_free_mean(std::move(power));
    s.energy_per_sum = s.avg_power_w / s.avg_sum_rate_bps;
    s.energy_per_median = s.avg_power_w / s.avg_median_rate_bps;
    s.energy_per_p10 = s.avg_power_w / s.avg_p10_rate_bps;
    return s;
}

namespace {

double improvement_pct(double baseline, double dbada, const std::string& what) {
    if (baseline == 0.0) {
        throw std::domain_error("baseline " + what + " is zero");
    }
    return 100.0 * (baseline - dbada) / baseline;
}

}  // namespace

std::vector<ImprovementRow> improvement_table(const ScenarioSummary& dbada,
                                              std::span<const ScenarioSummary> baselines) {
    std::vector<ImprovementRow> rows;
    rows.reserve(baselines.size());
    for (const auto& b : baselines) {
        rows.push_back({dbada.scenario, b.scenario,
                        improvement_pct(b.energy_per_sum, dbada.energy_per_sum,
                                        b.scenario + " energy/sum rate"),
                        improvement_pct(b.energy_per_median, dbada.energy_per_median,
                                        b.scenario + " energy/median rate"),
                        improvement_pct(b.energy_per_p10, dbada.energy_per_p10,
                                        b.scenario + " energy/p10 rate")});
    }
    return rows;
}

}  // namespace hetnet
