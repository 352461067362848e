#pragma once

// Two-tier network geometry and link budgets.
//
// Base stations are indexed macro = 0, pico i = i + 1 (i in [0, K)).
// All distances are metres unless a name says otherwise.

#include <cstddef>
#include <random>
#include <vector>

namespace hetnet {

using RandomEngine = std::mt19937_64;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point2 a, Point2 b);

enum class Tier { macro, pico };

struct LayoutConfig {
    std::size_t sectors_per_macro = 3;
    std::size_t hotspots = 6;
    double cell_radius_m = 500.0;
    double hotspot_fraction = 0.9;  // pico centre distance from macro / cell radius
    double hotspot_radius_m = 40.0;
    double min_dist_macro_m = 35.0;
    double min_dist_pico_m = 10.0;
};

struct NetworkLayout {
    Point2 macro_position;
    std::size_t sectors_per_macro = 3;
    std::vector<Point2> pico_positions;
    double hotspot_radius_m = 0.0;
    double cell_radius_m = 0.0;
    double min_dist_macro_m = 0.0;
    double min_dist_pico_m = 0.0;

    std::size_t pico_count() const { return pico_positions.size(); }
    std::size_t bs_count() const { return pico_positions.size() + 1; }
    Point2 bs_position(std::size_t bs) const;
    Tier bs_tier(std::size_t bs) const { return bs == 0 ? Tier::macro : Tier::pico; }
};

struct BaseStationParams {
    Tier tier = Tier::macro;
    double tx_power_dbm = 46.0;
    double antenna_gain_dbi = 14.0;
    double active_power_w = 390.0;
    double idle_power_w = 0.0;
};

BaseStationParams default_macro_params();
BaseStationParams default_pico_params();

// Radio parameters of the two tiers, in the form link_gains() consumes.
struct RadioParams {
    BaseStationParams macro = default_macro_params();
    BaseStationParams pico = default_pico_params();

    const BaseStationParams& of(Tier tier) const { return tier == Tier::macro ? macro : pico; }
};

// Where a user came from: the uniform macro-wide process or one HotSpot.
struct UserOrigin {
    static constexpr int uniform = -1;
    int hotspot = uniform;

    bool is_uniform() const { return hotspot < 0; }
};

struct UserSet {
    std::vector<Point2> positions;
    std::vector<UserOrigin> origins;

    std::size_t size() const { return positions.size(); }
};

// Received signal power per (user, base station), linear Watts.
class LinkGainTable {
public:
    LinkGainTable() = default;
    LinkGainTable(std::size_t users, std::size_t stations);

    std::size_t users() const { return users_; }
    std::size_t stations() const { return stations_; }

    double received_power_w(std::size_t user, std::size_t bs) const {
        return power_w_[user * stations_ + bs];
    }
    void set(std::size_t user, std::size_t bs, double watts) {
        power_w_[user * stations_ + bs] = watts;
    }

private:
    std::size_t users_ = 0;
    std::size_t stations_ = 0;
    std::vector<double> power_w_;
};

/// Places K picos at f * cell_radius from the macro, azimuth of pico i = 2*pi*i/K.
/// Throws std::invalid_argument when a HotSpot disc would leave the cell or reach
/// into the macro exclusion disc.
NetworkLayout build_layout(const LayoutConfig& config);

/// Drops n_macro users uniformly over the cell disc and n_hotspot users over
/// uniformly chosen HotSpot discs, rejecting positions closer than the minimum
/// distance to any base station.
UserSet drop_users(const NetworkLayout& layout, std::size_t n_macro, std::size_t n_hotspot,
                   RandomEngine& rng);

/// 3GPP-style distance-dependent path loss, distance in km.
double path_loss_db(Tier tier, double distance_km);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

LinkGainTable link_gains(const NetworkLayout& layout, const UserSet& users,
                         const RadioParams& radio);

}  // namespace hetnet
