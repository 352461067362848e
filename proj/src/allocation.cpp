#include "hetnet/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hetnet {

std::string to_string(Scheduler s) { return s == Scheduler::pfs ? "PFS" : "EA"; }

double rate(double w_hz, double p_rx_w, double noise_psd) {
    if (w_hz <= 0.0) {
        return 0.0;
    }
    return w_hz * std::log1p(p_rx_w / (noise_psd * w_hz)) / std::numbers::ln2;
}

namespace {

// h(x) = 1 - x / ((1 + x) ln(1 + x)), so that d ln r / dW = h(s / W) / W with
// s = p / N0. h rises from 0 (x -> 0) to 1 (x -> inf).
double slope_factor(double x) {
    const double denom = (1.0 + x) * std::log1p(x);
    if (x < 1e-2) {
        // (1 + x) ln(1 + x) - x = sum_{k>=2} (-1)^k x^k / (k (k - 1))
        double numer = 0.0;
        double power = -x;
        for (int k = 2; k <= 12; ++k) {
            power *= -x;
            numer += power / (k * (k - 1.0));
        }
        return numer / denom;
    }
    return 1.0 - x / denom;
}

struct Bracket {
    double lo;
    double hi;
    double mid() const { return 0.5 * (lo + hi); }
};

// Shrinks [lo, hi] around the W with h(s / W) / W == lambda, s = p / N0,
// until its relative width is at most `rel_tol`. The left side is strictly
// decreasing in W, so the returned ends remain valid bounds.
Bracket invert_marginal(double lambda, double snr_density, Bracket b, double rel_tol,
                        int max_iterations) {
    for (int it = 0; it < max_iterations; ++it) {
        if (b.hi - b.lo <= rel_tol * b.lo) {
            return b;
        }
        const double mid = b.mid();
        if (slope_factor(snr_density / mid) / mid > lambda) {
            b.lo = mid;
        } else {
            b.hi = mid;
        }
    }
    throw SolverError("PFS inner bisection did not converge");
}

// Rescale to the budget, then set the last share so that the forward sum
// equals the budget exactly. The rounded sum is monotone in the last share and
// that share never exceeds the budget, so a few ulp steps always land on it.
void conserve_budget(std::vector<double>& shares, double budget) {
    if (shares.empty()) {
        return;
    }
    const double total = share_sum(shares);
    if (total > 0.0 && total != budget) {
        const double scale = budget / total;
        for (auto& w : shares) {
            w *= scale;
        }
    }
    const double prefix = share_sum(std::span<const double>(shares).first(shares.size() - 1));
    double& last = shares.back();
    last = budget - prefix;
    for (int step = 0; step < 64; ++step) {
        const double sum = prefix + last;
        if (sum == budget) {
            break;
        }
        last = std::nextafter(last, sum < budget ? std::numeric_limits<double>::infinity() : 0.0);
    }
}

Allocation make_allocation(const Pool& pool, std::vector<double> shares, double budget_hz,
                           const RateParams& params, Scheduler scheduler) {
    Allocation a;
    a.users = pool.users;
    a.pool_budget_hz = budget_hz;
    a.scheduler = scheduler;
    a.rate_bps.resize(pool.size());
    for (std::size_t n = 0; n < pool.size(); ++n) {
        a.rate_bps[n] = rate(shares[n], pool.rx_power_w[n], params.noise_psd_w_per_hz);
    }
    a.bandwidth_hz = std::move(shares);
    return a;
}

}  // namespace

double marginal_log_rate(double w_hz, double p_rx_w, double noise_psd) {
    return slope_factor(p_rx_w / (noise_psd * w_hz)) / w_hz;
}

double share_sum(std::span<const double> shares) {
    double total = 0.0;
    for (double w : shares) {
        total += w;
    }
    return total;
}

Allocation ea_allocate(const Pool& pool, double budget_hz, const RateParams& params) {
    if (pool.size() == 0) {
        return make_allocation(pool, {}, budget_hz, params, Scheduler::ea);
    }
    std::vector<double> shares(pool.size(), budget_hz / static_cast<double>(pool.size()));
    if (budget_hz > 0.0) {
        conserve_budget(shares, budget_hz);
    }
    return make_allocation(pool, std::move(shares), budget_hz, params, Scheduler::ea);
}

Allocation pfs_allocate(const Pool& pool, double budget_hz, const RateParams& params,
                        const PfsOptions& options) {
    if (pool.size() == 0) {
        throw std::invalid_argument("PFS needs a non-empty pool");
    }
    if (!(budget_hz > 0.0)) {
        throw std::invalid_argument("PFS needs a positive budget");
    }
    const double n0 = params.noise_psd_w_per_hz;
    const std::size_t n = pool.size();
    std::vector<double> snr_density(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(pool.rx_power_w[i] > 0.0)) {
            throw std::invalid_argument("PFS needs positive received powers");
        }
        snr_density[i] = pool.rx_power_w[i] / n0;
    }

    // At the optimum some user holds at most budget/N and some at least
    // budget/N, so lambda is bracketed by the marginals at the equal split.
    const double equal_share = budget_hz / static_cast<double>(n);
    double lambda_lo = std::numeric_limits<double>::infinity();
    double lambda_hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double g = marginal_log_rate(equal_share, pool.rx_power_w[i], n0);
        lambda_lo = std::min(lambda_lo, g);
        lambda_hi = std::max(lambda_hi, g);
    }

    std::vector<double> shares(n, equal_share);
    if (lambda_lo < lambda_hi) {
        constexpr double kInnerFloor = 1e-12;
        // W_n(lambda) is decreasing, so bounds found at the current lambda
        // bracket ends also bound every inner solve inside it.
        std::vector<double> upper_at_lambda_lo(n, std::numeric_limits<double>::infinity());
        std::vector<double> lower_at_lambda_hi(n, 0.0);
        std::vector<Bracket> found(n);
        auto fill_shares = [&](double lambda, double rel_tol) {
            for (std::size_t i = 0; i < n; ++i) {
                // g(W) = h(s/W) / W with h in (0, 1) and h increasing in s/W:
                // W < 1/lambda and W >= h(lambda s) / lambda.
                const Bracket start{
                    std::max(lower_at_lambda_hi[i], slope_factor(lambda * snr_density[i]) / lambda),
                    std::min(upper_at_lambda_lo[i], 1.0 / lambda)};
                found[i] = invert_marginal(lambda, snr_density[i], start, rel_tol,
                                           options.max_inner_iterations);
                shares[i] = found[i].mid();
            }
            return share_sum(shares);
        };
        bool converged = false;
        for (int it = 0; it < options.max_outer_iterations; ++it) {
            const double lambda = 0.5 * (lambda_lo + lambda_hi);
            // Inner precision only needs to resolve the outer decision; it is
            // tightened to the floor whenever the decision is ambiguous.
            double rel_tol = std::max(kInnerFloor, 1e-3 * (lambda_hi - lambda_lo) / lambda);
            double total = fill_shares(lambda, rel_tol);
            if (rel_tol > kInnerFloor &&
                std::abs(total - budget_hz) <= 2.0 * rel_tol * total + options.tolerance * budget_hz) {
                rel_tol = kInnerFloor;
                total = fill_shares(lambda, rel_tol);
            }
            if (std::abs(total - budget_hz) <= options.tolerance * budget_hz) {
                converged = true;
                break;
            }
            if (total > budget_hz) {
                lambda_lo = lambda;
                for (std::size_t i = 0; i < n; ++i) upper_at_lambda_lo[i] = found[i].hi;
            } else {
                lambda_hi = lambda;
                for (std::size_t i = 0; i < n; ++i) lower_at_lambda_hi[i] = found[i].lo;
            }
        }
        if (!converged) {
            throw SolverError("PFS outer bisection did not converge");
        }
    }
    conserve_budget(shares, budget_hz);
    return make_allocation(pool, std::move(shares), budget_hz, params, Scheduler::pfs);
}

Allocation allocate(Scheduler scheduler, const Pool& pool, double budget_hz,
                    const RateParams& params, const PfsOptions& options) {
    if (scheduler == Scheduler::ea || pool.size() == 0) {
        Allocation a = ea_allocate(pool, budget_hz, params);
        a.scheduler = scheduler;
        return a;
    }
    if (budget_hz <= 0.0) {
        return make_allocation(pool, std::vector<double>(pool.size(), 0.0), budget_hz, params,
                               scheduler);
    }
    return pfs_allocate(pool, budget_hz, params, options);
}

double kkt_residual(const Allocation& allocation, std::span<const double> rx_power_w,
                    double noise_psd) {
    if (allocation.size() < 2) {
        return 0.0;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < allocation.size(); ++i) {
        const double g = marginal_log_rate(allocation.bandwidth_hz[i], rx_power_w[i], noise_psd);
        lo = std::min(lo, g);
        hi = std::max(hi, g);
    }
    return (hi - lo) / lo;
}

double log_utility(std::span<const double> rates_bps, double rate_unit_bps) {
    double total = 0.0;
    for (double r : rates_bps) {
        total += std::log(r / rate_unit_bps);
    }
    return total;
}

}  // namespace hetnet
