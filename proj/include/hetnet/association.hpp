#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hetnet/topology.hpp"

namespace hetnet {

// Active (true) / Idle (false) flag per pico cell. The macro is always on
// and is not part of the vector.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(std::vector<bool> active) : active_(std::move(active)) {}

    static StateVector all_idle(std::size_t k) { return StateVector(std::vector<bool>(k, false)); }
    static StateVector all_active(std::size_t k) { return StateVector(std::vector<bool>(k, true)); }
    /// Bit i of `mask` is the state of pico i.
    static StateVector from_mask(std::uint64_t mask, std::size_t k);

    std::size_t size() const { return active_.size(); }
    bool active(std::size_t pico) const { return active_[pico]; }
    std::size_t active_count() const;
    const std::vector<bool>& bits() const { return active_; }
    std::string to_string() const;  // e.g. "010011", pico 0 first

    friend bool operator==(const StateVector&, const StateVector&) = default;
    friend auto operator<=>(const StateVector& a, const StateVector& b) {
        return a.active_ <=> b.active_;
    }

private:
    std::vector<bool> active_;
};

struct AssociationMap {
    std::vector<std::size_t> serving_bs;            // per user; 0 = macro, i + 1 = pico i
    std::vector<std::vector<std::size_t>> members;  // per base station, ascending user index

    std::size_t users() const { return serving_bs.size(); }
};

/// Max received power over the macro and the active picos; ties go to the
/// lowest base-station index.
AssociationMap associate(const LinkGainTable& gains, const StateVector& state);

}  // namespace hetnet
