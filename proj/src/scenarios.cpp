#include "hetnet/scenarios.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "hetnet/format.hpp"

namespace hetnet {

void validate(const EnergyModel& energy) {
    if (!(energy.macro_power_w >= 0.0) || !(energy.pico_idle_w >= 0.0)) {
        throw std::invalid_argument("energy model powers must be non-negative");
    }
    if (!(energy.pico_active_w > energy.pico_idle_w)) {
        throw std::invalid_argument("pico active power must exceed idle power");
    }
}

double network_power(const StateVector& state, const EnergyModel& energy) {
    double total = static_cast<double>(energy.sectors) * energy.macro_power_w;
    for (std::size_t i = 0; i < state.size(); ++i) {
        total += state.active(i) ? energy.pico_active_w : energy.pico_idle_w;
    }
    return total;
}

double objective_at(const StateEvaluation& eval, double beta) {
    return eval.utility_sum - beta * eval.network_power_w;
}

namespace {

Pool make_pool(std::span<const std::size_t> users, const LinkGainTable& gains,
               const AssociationMap& association) {
    Pool pool;
    pool.users.assign(users.begin(), users.end());
    pool.rx_power_w.reserve(users.size());
    for (std::size_t u : users) {
        pool.rx_power_w.push_back(gains.received_power_w(u, association.serving_bs[u]));
    }
    return pool;
}

// Scatters pool allocations into per-user vectors and scores the result.
void finish(StateEvaluation& eval, const EnergyModel& energy, double beta,
            const EvaluationOptions& options) {
    const std::size_t n = eval.association.users();
    eval.rate_bps.assign(n, 0.0);
    eval.bandwidth_hz.assign(n, 0.0);
    for (const auto& a : eval.allocations) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            eval.rate_bps[a.users[i]] = a.rate_bps[i];
            eval.bandwidth_hz[a.users[i]] = a.bandwidth_hz[i];
        }
    }
    eval.utility_sum = log_utility(eval.rate_bps, options.rate_unit_bps);
    eval.network_power_w = network_power(eval.state, energy);
    eval.beta = beta;
    eval.objective = objective_at(eval, beta);
}

StateEvaluation evaluate_network_wide(const StateVector& state, const LinkGainTable& gains,
                                      const RateParams& params, const EnergyModel& energy,
                                      double beta, Scheduler scheduler,
                                      const EvaluationOptions& options) {
    StateEvaluation eval;
    eval.state = state;
    eval.association = associate(gains, state);
    std::vector<std::size_t> everyone(gains.users());
    for (std::size_t u = 0; u < everyone.size(); ++u) {
        everyone[u] = u;
    }
    eval.allocations.push_back(allocate(scheduler, make_pool(everyone, gains, eval.association),
                                        params.total_bandwidth_hz, params, options.pfs));
    finish(eval, energy, beta, options);
    return eval;
}

}  // namespace

StateEvaluation evaluate_state(const StateVector& state, const LinkGainTable& gains,
                               const RateParams& params, const EnergyModel& energy, double beta,
                               const EvaluationOptions& options) {
    return evaluate_network_wide(state, gains, params, energy, beta, Scheduler::pfs, options);
}

std::vector<StateEvaluation> enumerate_states(const LinkGainTable& gains,
                                              const RateParams& params,
                                              const EnergyModel& energy, double beta,
                                              const EvaluationOptions& options) {
    const std::size_t k = gains.stations() - 1;
    if (k > kMaxSwitchablePicos) {
        throw std::invalid_argument("exhaustive state search supports at most " +
                                    std::to_string(kMaxSwitchablePicos) + " picos");
    }
    const std::uint64_t count = std::uint64_t{1} << k;
    std::vector<StateEvaluation> out;
    out.reserve(count);
    // States that differ only in picos nobody adopts share an association and
    // therefore an allocation.
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        const StateVector state = StateVector::from_mask(mask, k);
        AssociationMap association = associate(gains, state);
        if (const auto it = seen.find(association.serving_bs); it != seen.end()) {
            StateEvaluation eval = out[it->second];
            eval.state = state;
            eval.association = std::move(association);
            eval.network_power_w = network_power(state, energy);
            eval.objective = objective_at(eval, beta);
            out.push_back(std::move(eval));
            continue;
        }
        seen.emplace(association.serving_bs, out.size());
        out.push_back(evaluate_state(state, gains, params, energy, beta, options));
    }
    return out;
}

std::vector<StateScore> scores(std::span<const StateEvaluation> evaluations,
                               std::optional<double> rate_unit_bps) {
    std::vector<StateScore> out;
    out.reserve(evaluations.size());
    for (const auto& e : evaluations) {
        const double utility =
            rate_unit_bps ? log_utility(e.rate_bps, *rate_unit_bps) : e.utility_sum;
        out.push_back({e.state, utility, e.network_power_w});
    }
    return out;
}

std::size_t select_best(std::span<const StateScore> candidates, double beta) {
    if (candidates.empty()) {
        throw std::invalid_argument("no candidate states");
    }
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& c : candidates) {
        best = std::max(best, c.utility_sum - beta * c.network_power_w);
    }
    std::size_t chosen = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto& c = candidates[i];
        const double objective = c.utility_sum - beta * c.network_power_w;
        if (!(objective >= best - kObjectiveTieTolerance)) {
            continue;
        }
        if (chosen == candidates.size()) {
            chosen = i;
            continue;
        }
        const auto& incumbent = candidates[chosen];
        const auto a = c.state.active_count();
        const auto b = incumbent.state.active_count();
        if (a < b || (a == b && c.state < incumbent.state)) {
            chosen = i;
        }
    }
    if (chosen == candidates.size()) {
        // Every objective is -inf (some user starved in every state).
        chosen = 0;
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            const auto& c = candidates[i];
            const auto& incumbent = candidates[chosen];
            const auto a = c.state.active_count();
            const auto b = incumbent.state.active_count();
            if (a < b || (a == b && c.state < incumbent.state)) {
                chosen = i;
            }
        }
    }
    return chosen;
}

StateEvaluation dbada_optimize(const LinkGainTable& gains, const RateParams& params,
                               const EnergyModel& energy, double beta,
                               const EvaluationOptions& options) {
    auto all = enumerate_states(gains, params, energy, beta, options);
    const auto candidates = scores(all);
    return std::move(all[select_best(candidates, beta)]);
}

std::string ScenarioSpec::label() const {
    switch (kind) {
        case ScenarioKind::mo:
            return "MO-" + to_string(scheduler);
        case ScenarioKind::pa:
            return "PA" + format_double(alpha_percent) + "-" + to_string(scheduler);
        case ScenarioKind::dbada:
            return "DBADA-b" + format_double(beta);
    }
    return {};
}

namespace {

Scheduler parse_scheduler(std::string_view s) {
    if (s == "PFS") return Scheduler::pfs;
    if (s == "EA") return Scheduler::ea;
    throw std::invalid_argument("unknown scheduler '" + std::string(s) + "'");
}

double parse_number(std::string_view s, std::string_view label) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw std::invalid_argument("bad number in scenario '" + std::string(label) + "'");
    }
    return value;
}

}  // namespace

ScenarioSpec parse_scenario(std::string_view label) {
    ScenarioSpec spec;
    if (label.starts_with("MO-")) {
        spec = ScenarioSpec::macro_only(parse_scheduler(label.substr(3)));
    } else if (label.starts_with("PA")) {
        const auto dash = label.find('-');
        if (dash == std::string_view::npos) {
            throw std::invalid_argument("PA scenario needs a scheduler: '" + std::string(label) +
                                        "'");
        }
        spec = ScenarioSpec::picos_active(parse_number(label.substr(2, dash - 2), label),
                                          parse_scheduler(label.substr(dash + 1)));
    } else if (label.starts_with("DBADA-b")) {
        spec = ScenarioSpec::dbada(parse_number(label.substr(7), label));
    } else {
        throw std::invalid_argument("unknown scenario '" + std::string(label) + "'");
    }
    validate(spec);
    return spec;
}

void validate(const ScenarioSpec& spec) {
    if (spec.kind == ScenarioKind::pa &&
        !(spec.alpha_percent >= 0.0 && spec.alpha_percent <= 100.0)) {
        throw std::invalid_argument("PA alpha must lie in [0, 100]");
    }
    if (spec.kind == ScenarioKind::dbada && !(spec.beta >= 0.0 && std::isfinite(spec.beta))) {
        throw std::invalid_argument("DBADA beta must be finite and non-negative");
    }
}

StateEvaluation run_scenario(const ScenarioSpec& spec, const LinkGainTable& gains,
                             const RateParams& params, const EnergyModel& energy,
                             const EvaluationOptions& options) {
    validate(spec);
    const std::size_t k = gains.stations() - 1;
    switch (spec.kind) {
        case ScenarioKind::mo:
            return evaluate_network_wide(StateVector::all_idle(k), gains, params, energy, 0.0,
                                         spec.scheduler, options);
        case ScenarioKind::dbada:
            return dbada_optimize(gains, params, energy, spec.beta, options);
        case ScenarioKind::pa:
            break;
    }

    StateEvaluation eval;
    eval.state = StateVector::all_active(k);
    eval.association = associate(gains, eval.state);
    std::vector<std::size_t> pico_users;
    for (std::size_t b = 1; b < gains.stations(); ++b) {
        const auto& m = eval.association.members[b];
        pico_users.insert(pico_users.end(), m.begin(), m.end());
    }
    std::sort(pico_users.begin(), pico_users.end());

    const double pico_share = spec.alpha_percent / 100.0;
    const double total = params.total_bandwidth_hz;
    eval.allocations.push_back(allocate(spec.scheduler,
                                        make_pool(eval.association.members[0], gains,
                                                  eval.association),
                                        (1.0 - pico_share) * total, params, options.pfs));
    eval.allocations.push_back(allocate(spec.scheduler,
                                        make_pool(pico_users, gains, eval.association),
                                        pico_share * total, params, options.pfs));
    finish(eval, energy, 0.0, options);
    return eval;
}

}  // namespace hetnet
