#pragma once

#include <cstddef>
#include <vector>

#include "hetnet/topology.hpp"

namespace hetnet {

// Hourly average user populations plus the relative half-width of the
// zero-mean integer fluctuation applied on each draw.
struct TrafficProfile {
    std::vector<double> macro_means;
    std::vector<double> hotspot_means;
    double fluctuation_fraction = 0.2;

    std::size_t hours() const { return macro_means.size(); }
};

struct UserCounts {
    std::size_t n_macro = 0;
    std::size_t n_hotspot = 0;
    std::size_t hour = 0;
};

/// The nine-hour day used throughout the study (macro users decay while
/// HotSpot users build up), delta = 0.2.
TrafficProfile default_profile();

/// Throws std::invalid_argument on mismatched lengths, negative means or
/// a fluctuation fraction outside [0, 1).
void validate(const TrafficProfile& profile);

/// max(0, round(mean) + fluctuation).
std::size_t fluctuated_count(double mean, long long fluctuation);

/// Draws N = mean + n with n uniform on the integers [-floor(delta*mean), +floor(delta*mean)],
/// clamped at zero. `hour` is a 0-based index.
UserCounts user_counts(const TrafficProfile& profile, std::size_t hour, RandomEngine& rng);

}  // namespace hetnet
