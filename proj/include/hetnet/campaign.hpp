#pragma once

// Monte Carlo campaign: hours x drops, every scenario evaluated on the same
// drop (paired design), then aggregated and written as CSV.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hetnet/config.hpp"
#include "hetnet/metrics.hpp"
#include "hetnet/scenarios.hpp"
#include "hetnet/topology.hpp"
#include "hetnet/traffic.hpp"

namespace hetnet {

/// Independent, reproducible stream per (master seed, hour index, drop).
RandomEngine make_stream(std::uint64_t master_seed, std::size_t hour_index, std::size_t drop);

// Everything computed for one drop, handed to an observer.
struct DropContext {
    std::size_t hour_index = 0;  // 0-based
    std::size_t drop = 0;
    UserCounts counts;
    const UserSet* users = nullptr;
    const LinkGainTable* gains = nullptr;
    std::span<const ScenarioSpec> specs;
    std::span<const StateEvaluation> evaluations;  // parallel to specs
    // All 2^K pico states evaluated at beta = 0; empty when no DBADA scenario runs.
    std::span<const StateEvaluation> enumeration;
};

/// Called once per drop, possibly from several worker threads at once.
using DropObserver = std::function<void(const DropContext&)>;

struct CampaignResult {
    std::vector<MetricsRecord> records;  // ordered by hour, drop, scenario
    std::vector<ScenarioSummary> summaries;
    std::vector<ImprovementRow> improvements;
};

CampaignResult run_campaign(const SimulationConfig& config, const DropObserver& observer = {});

std::string records_csv(std::span<const MetricsRecord> records);
std::string summary_csv(std::span<const ScenarioSummary> summaries);
std::string improvement_csv(std::span<const ImprovementRow> rows);

/// Writes records.csv, summary.csv and improvement.csv into `out_dir`,
/// creating it if needed. Throws std::runtime_error naming the failing path.
void write_outputs(const CampaignResult& result, const std::filesystem::path& out_dir);

}  // namespace hetnet
