#include "hetnet/association.hpp"

#include <algorithm>
#include <stdexcept>

namespace hetnet {

StateVector StateVector::from_mask(std::uint64_t mask, std::size_t k) {
    std::vector<bool> bits(k);
    for (std::size_t i = 0; i < k; ++i) {
        bits[i] = ((mask >> i) & 1U) != 0;
    }
    return StateVector(std::move(bits));
}

std::size_t StateVector::active_count() const {
    return static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
}

std::string StateVector::to_string() const {
    std::string s;
    s.reserve(active_.size());
    for (bool b : active_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

AssociationMap associate(const LinkGainTable& gains, const StateVector& state) {
    if (gains.stations() != state.size() + 1) {
        throw std::invalid_argument("state vector length does not match the pico count");
    }
    AssociationMap map;
    map.serving_bs.resize(gains.users(), 0);
    map.members.resize(gains.stations());
    for (std::size_t u = 0; u < gains.users(); ++u) {
        std::size_t best = 0;
        double best_power = gains.received_power_w(u, 0);
        for (std::size_t i = 0; i < state.size(); ++i) {
            if (!state.active(i)) {
                continue;
            }
            const double p = gains.received_power_w(u, i + 1);
            if (p > best_power) {
                best_power = p;
                best = i + 1;
            }
        }
        map.serving_bs[u] = best;
        map.members[best].push_back(u);
    }
    return map;
}

}  // namespace hetnet
