#include "hetnet/traffic.hpp"

#include <cmath>
#include <stdexcept>

namespace hetnet {

TrafficProfile default_profile() {
    return TrafficProfile{
        {197, 170, 140, 110, 80, 50, 20, 5, 5},
        {1, 10, 20, 30, 40, 50, 60, 65, 65},
        0.2,
    };
}

void validate(const TrafficProfile& profile) {
    if (profile.macro_means.empty()) {
        throw std::invalid_argument("traffic profile needs at least one hour");
    }
    if (profile.macro_means.size() != profile.hotspot_means.size()) {
        throw std::invalid_argument("macro and HotSpot profiles differ in length");
    }
    for (std::size_t h = 0; h < profile.hours(); ++h) {
        if (!(profile.macro_means[h] >= 0.0) || !(profile.hotspot_means[h] >= 0.0)) {
            throw std::invalid_argument("traffic means must be non-negative");
        }
    }
    if (!(profile.fluctuation_fraction >= 0.0 && profile.fluctuation_fraction < 1.0)) {
        throw std::invalid_argument("fluctuation fraction must lie in [0, 1)");
    }
}

std::size_t fluctuated_count(double mean, long long fluctuation) {
    const long long count = std::llround(mean) + fluctuation;
    return count > 0 ? static_cast<std::size_t>(count) : 0;
}

namespace {

std::size_t draw_count(double mean, double delta, RandomEngine& rng) {
    const auto half_width = static_cast<long long>(std::floor(delta * mean));
    long long fluctuation = 0;
    if (half_width > 0) {
        std::uniform_int_distribution<long long> dist(-half_width, half_width);
        fluctuation = dist(rng);
    }
    return fluctuated_count(mean, fluctuation);
}

}  // namespace

UserCounts user_counts(const TrafficProfile& profile, std::size_t hour, RandomEngine& rng) {
    if (hour >= profile.hours()) {
        throw std::out_of_range("hour index beyond traffic profile");
    }
    const double delta = profile.fluctuation_fraction;
    UserCounts counts;
    counts.hour = hour;
    counts.n_macro = draw_count(profile.macro_means[hour], delta, rng);
    counts.n_hotspot = draw_count(profile.hotspot_means[hour], delta, rng);
    return counts;
}

}  // namespace hetnet
