#pragma once

// Simulation configuration: a flat `key = value` text file with dotted
// sections. Values are numbers, bare words, or bracketed comma lists; `#`
// starts a comment. Every key is optional; unknown keys are rejected.
//
//   seed = 7
//   drops_per_hour = 100
//   system_bandwidth_hz = 100e6
//   layout.hotspots = 6
//   traffic.macro_means = [197, 170, 140, 110, 80, 50, 20, 5, 5]
//   scenarios.list = [MO-PFS, PA80-EA, DBADA]
//   scenarios.beta = [0.5, 1]

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/allocation.hpp"
#include "hetnet/scenarios.hpp"
#include "hetnet/topology.hpp"
#include "hetnet/traffic.hpp"

namespace hetnet {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message);
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

struct SimulationConfig {
    LayoutConfig layout;
    RadioParams radio;
    EnergyModel energy;
    RateParams rate;
    PfsOptions pfs;
    TrafficProfile traffic = default_profile();
    // "DBADA" without a price expands to one scenario per entry of `betas`.
    std::vector<std::string> scenario_labels = {"MO-PFS",   "MO-EA",    "PA20-PFS",
                                                "PA20-EA",  "PA50-PFS", "PA50-EA",
                                                "PA80-PFS", "PA80-EA",  "DBADA"};
    std::vector<double> betas = {0.5};
    std::size_t drops_per_hour = 100;
    std::uint64_t seed = 1;
    std::size_t workers = 0;  // 0: one per hardware thread

    std::vector<ScenarioSpec> scenarios() const;
};

/// Throws ConfigError naming the offending key.
void validate(const SimulationConfig& config);

SimulationConfig parse_config(std::string_view text);
SimulationConfig load_config(const std::filesystem::path& path);

}  // namespace hetnet
