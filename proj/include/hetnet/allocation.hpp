#pragma once

// Per-user spectrum shares and Shannon rates.
//
// A pool is a set of users sharing one bandwidth budget. The proportional-fair
// scheduler maximises sum_n ln r_n(W_n) over the simplex sum_n W_n = budget.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hetnet {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RateParams {
    double noise_psd_w_per_hz = 3.981071705534986e-21;  // -174 dBm/Hz
    double total_bandwidth_hz = 100e6;
};

struct Pool {
    std::vector<std::size_t> users;  // network-wide user indices
    std::vector<double> rx_power_w;  // received power from the serving station

    std::size_t size() const { return users.size(); }
};

enum class Scheduler { pfs, ea };

std::string to_string(Scheduler s);

struct Allocation {
    std::vector<std::size_t> users;
    std::vector<double> bandwidth_hz;
    std::vector<double> rate_bps;
    double pool_budget_hz = 0.0;
    Scheduler scheduler = Scheduler::pfs;

    std::size_t size() const { return users.size(); }
};

struct PfsOptions {
    double tolerance = 1e-9;  // on |sum W - budget| / budget
    int max_outer_iterations = 200;
    int max_inner_iterations = 200;
};

/// W * log2(1 + p / (N0 W)) in bit/s; 0 at W = 0.
double rate(double w_hz, double p_rx_w, double noise_psd);

/// d ln(rate) / dW, closed form. Strictly decreasing in W.
double marginal_log_rate(double w_hz, double p_rx_w, double noise_psd);

/// Forward left-to-right sum. Budget conservation is defined against this order.
double share_sum(std::span<const double> shares);

Allocation ea_allocate(const Pool& pool, double budget_hz, const RateParams& params);

/// Unique maximiser of sum ln r_n by nested bisection on the KKT conditions.
/// Throws std::invalid_argument on an empty pool, non-positive budget or power,
/// SolverError when an iteration cap is reached.
Allocation pfs_allocate(const Pool& pool, double budget_hz, const RateParams& params,
                        const PfsOptions& options = {});

/// Dispatches on the scheduler. A pool with zero budget gets zero shares.
Allocation allocate(Scheduler scheduler, const Pool& pool, double budget_hz,
                    const RateParams& params, const PfsOptions& options = {});

/// Largest relative spread of the marginal log-rates across the pool,
/// (max g - min g) / min g. Zero for pools of size < 2.
double kkt_residual(const Allocation& allocation, std::span<const double> rx_power_w,
                    double noise_psd);

/// sum ln(r_n / rate_unit_bps); -inf when any rate is zero.
double log_utility(std::span<const double> rates_bps, double rate_unit_bps = 1.0);

}  // namespace hetnet
