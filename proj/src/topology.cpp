#include "hetnet/topology.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hetnet {

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

Point2 NetworkLayout::bs_position(std::size_t bs) const {
    return bs == 0 ? macro_position : pico_positions.at(bs - 1);
}

BaseStationParams default_macro_params() {
    return BaseStationParams{Tier::macro, 46.0, 14.0, 390.0, 0.0};
}

BaseStationParams default_pico_params() {
    return BaseStationParams{Tier::pico, 30.0, 5.0, 9.0, 0.5};
}

LinkGainTable::LinkGainTable(std::size_t users, std::size_t stations)
    : users_(users), stations_(stations), power_w_(users * stations, 0.0) {}

NetworkLayout build_layout(const LayoutConfig& config) {
    const double radius = config.cell_radius_m;
    if (!(radius > 0.0)) {
        throw std::invalid_argument("cell_radius_m must be positive");
    }
    if (config.sectors_per_macro == 0) {
        throw std::invalid_argument("sectors_per_macro must be at least 1");
    }
    if (!(config.min_dist_macro_m > 0.0 && config.min_dist_macro_m < radius)) {
        throw std::invalid_argument("min_dist_macro_m must lie in (0, cell_radius_m)");
    }
    if (!(config.min_dist_pico_m > 0.0 && config.min_dist_pico_m < radius)) {
        throw std::invalid_argument("min_dist_pico_m must lie in (0, cell_radius_m)");
    }

    NetworkLayout layout;
    layout.sectors_per_macro = config.sectors_per_macro;
    layout.cell_radius_m = radius;
    layout.hotspot_radius_m = config.hotspot_radius_m;
    layout.min_dist_macro_m = config.min_dist_macro_m;
    layout.min_dist_pico_m = config.min_dist_pico_m;

    const std::size_t k = config.hotspots;
    if (k == 0) {
        return layout;
    }

    const double f = config.hotspot_fraction;
    if (!(f > 0.0 && f <= 1.0)) {
        throw std::invalid_argument("hotspot_fraction must lie in (0, 1]");
    }
    const double r_hot = config.hotspot_radius_m;
    if (!(r_hot > config.min_dist_pico_m)) {
        throw std::invalid_argument("hotspot_radius_m must exceed min_dist_pico_m");
    }
    const double centre = f * radius;
    if (centre + r_hot > radius) {
        throw std::invalid_argument("HotSpot disc exceeds the cell: " + std::to_string(centre) +
                                    " + " + std::to_string(r_hot) + " > " +
                                    std::to_string(radius));
    }
    if (centre - r_hot <= config.min_dist_macro_m) {
        throw std::invalid_argument("HotSpot disc overlaps the macro exclusion disc");
    }

    layout.pico_positions.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const double azimuth = 2.0 * std::numbers::pi * static_cast<double>(i) /
                               static_cast<double>(k);
        layout.pico_positions.push_back({centre * std::cos(azimuth), centre * std::sin(azimuth)});
    }
    return layout;
}

namespace {

Point2 uniform_in_disc(Point2 centre, double radius, RandomEngine& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return {centre.x + r * std::cos(theta), centre.y + r * std::sin(theta)};
}

bool respects_min_distances(const NetworkLayout& layout, Point2 p) {
    if (distance(p, layout.macro_position) < layout.min_dist_macro_m) {
        return false;
    }
    for (const auto& pico : layout.pico_positions) {
        if (distance(p, pico) < layout.min_dist_pico_m) {
            return false;
        }
    }
    return true;
}

}  // namespace

UserSet drop_users(const NetworkLayout& layout, std::size_t n_macro, std::size_t n_hotspot,
                   RandomEngine& rng) {
    if (n_hotspot > 0 && layout.pico_count() == 0) {
        throw std::invalid_argument("HotSpot users requested but the layout has no HotSpots");
    }
    UserSet users;
    users.positions.reserve(n_macro + n_hotspot);
    users.origins.reserve(n_macro + n_hotspot);

    for (std::size_t n = 0; n < n_macro; ++n) {
        Point2 p;
        do {
            p = uniform_in_disc(layout.macro_position, layout.cell_radius_m, rng);
        } while (!respects_min_distances(layout, p));
        users.positions.push_back(p);
        users.origins.push_back({});
    }

    if (n_hotspot > 0) {
        std::uniform_int_distribution<std::size_t> pick(0, layout.pico_count() - 1);
        for (std::size_t n = 0; n < n_hotspot; ++n) {
            const std::size_t h = pick(rng);
            Point2 p;
            do {
                p = uniform_in_disc(layout.pico_positions[h], layout.hotspot_radius_m, rng);
            } while (!respects_min_distances(layout, p));
            users.positions.push_back(p);
            users.origins.push_back({static_cast<int>(h)});
        }
    }
    return users;
}

double path_loss_db(Tier tier, double distance_km) {
    if (!(distance_km > 0.0)) {
        throw std::invalid_argument("path loss distance must be positive");
    }
    const double lg = std::log10(distance_km);
    return tier == Tier::macro ? 128.1 + 37.6 * lg : 140.7 + 36.7 * lg;
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

LinkGainTable link_gains(const NetworkLayout& layout, const UserSet& users,
                         const RadioParams& radio) {
    LinkGainTable table(users.size(), layout.bs_count());
    for (std::size_t b = 0; b < layout.bs_count(); ++b) {
        const Tier tier = layout.bs_tier(b);
        const auto& bs = radio.of(tier);
        const Point2 site = layout.bs_position(b);
        for (std::size_t u = 0; u < users.size(); ++u) {
            const double d_km = distance(users.positions[u], site) / 1000.0;
            const double rx_dbm = bs.tx_power_dbm + bs.antenna_gain_dbi - path_loss_db(tier, d_km);
            table.set(u, b, dbm_to_watts(rx_dbm));
        }
    }
    return table;
}

}  // namespace hetnet
