#pragma once

// Objective evaluation per pico state vector, the exhaustive DBADA search
// (Dynamic Bandwidth Allocation and Dynamic Activation), and the static
// baselines: macro-only (MO) and picos-active with a fixed alpha% pico-tier
// spectrum share (PA).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetnet/allocation.hpp"
#include "hetnet/association.hpp"
#include "hetnet/topology.hpp"

namespace hetnet {

inline constexpr std::size_t kMaxSwitchablePicos = 20;
inline constexpr double kObjectiveTieTolerance = 1e-9;

struct EnergyModel {
    double macro_power_w = 390.0;  // per sector
    std::size_t sectors = 3;
    double pico_active_w = 9.0;
    double pico_idle_w = 0.5;
};

void validate(const EnergyModel& energy);

double network_power(const StateVector& state, const EnergyModel& energy);

struct EvaluationOptions {
    PfsOptions pfs;
    double rate_unit_bps = 1.0;  // utility is sum ln(r / rate_unit_bps)
};

struct StateEvaluation {
    StateVector state;
    AssociationMap association;
    std::vector<Allocation> allocations;  // one per spectrum pool
    std::vector<double> rate_bps;         // per user, network order
    std::vector<double> bandwidth_hz;     // per user, network order
    double utility_sum = 0.0;             // nats
    double network_power_w = 0.0;
    double beta = 0.0;
    double objective = 0.0;  // utility_sum - beta * network_power_w

    std::size_t users() const { return rate_bps.size(); }
};

double objective_at(const StateEvaluation& eval, double beta);

/// Associates under `state` and runs PFS over all users on one network-wide
/// budget of total_bandwidth_hz.
StateEvaluation evaluate_state(const StateVector& state, const LinkGainTable& gains,
                               const RateParams& params, const EnergyModel& energy, double beta,
                               const EvaluationOptions& options = {});

/// Evaluates every one of the 2^K pico states; element m is the state with
/// bit i of m = pico i.
std::vector<StateEvaluation> enumerate_states(const LinkGainTable& gains,
                                              const RateParams& params,
                                              const EnergyModel& energy, double beta,
                                              const EvaluationOptions& options = {});

struct StateScore {
    StateVector state;
    double utility_sum = 0.0;
    double network_power_w = 0.0;
};

std::vector<StateScore> scores(std::span<const StateEvaluation> evaluations,
                               std::optional<double> rate_unit_bps = std::nullopt);

/// Index of the best candidate at price `beta`. Every candidate within
/// kObjectiveTieTolerance of the maximum is a tie; ties prefer fewer active
/// picos, then the lexicographically smallest state. Independent of order.
std::size_t select_best(std::span<const StateScore> candidates, double beta);

StateEvaluation dbada_optimize(const LinkGainTable& gains, const RateParams& params,
                               const EnergyModel& energy, double beta,
                               const EvaluationOptions& options = {});

enum class ScenarioKind { mo, pa, dbada };

struct ScenarioSpec {
    ScenarioKind kind = ScenarioKind::mo;
    Scheduler scheduler = Scheduler::pfs;
    double alpha_percent = 0.0;  // PA only
    double beta = 0.0;           // DBADA only

    static ScenarioSpec macro_only(Scheduler s) { return {ScenarioKind::mo, s, 0.0, 0.0}; }
    static ScenarioSpec picos_active(double alpha, Scheduler s) {
        return {ScenarioKind::pa, s, alpha, 0.0};
    }
    static ScenarioSpec dbada(double beta) {
        return {ScenarioKind::dbada, Scheduler::pfs, 0.0, beta};
    }

    /// "MO-PFS", "PA20-EA", "DBADA-b0.5".
    std::string label() const;
};

/// Inverse of ScenarioSpec::label(). Throws std::invalid_argument.
ScenarioSpec parse_scenario(std::string_view label);

void validate(const ScenarioSpec& spec);

/// MO: all picos idle, one pool over all users. PA: all picos active, macro
/// users share (1 - alpha/100) W_T and pico users share alpha/100 W_T; an
/// empty pool leaves its budget unused. DBADA: dbada_optimize.
StateEvaluation run_scenario(const ScenarioSpec& spec, const LinkGainTable& gains,
                             const RateParams& params, const EnergyModel& energy,
                             const EvaluationOptions& options = {});

}  // namespace hetnet
