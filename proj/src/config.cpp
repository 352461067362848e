#include "hetnet/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace hetnet {

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key.empty() ? message : "config key '" + key + "': " + message),
      key_(std::move(key)) {}

namespace {

struct RawValue {
    std::vector<std::string> items;
    bool is_list = false;
    int line = 0;
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    return std::string(s);
}

std::map<std::string, RawValue> tokenize(std::string_view text) {
    std::map<std::string, RawValue> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("", "line " + std::to_string(number) + ": expected 'key = value'");
        }
        const std::string key(trim(view.substr(0, eq)));
        const std::string_view value = trim(view.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("", "line " + std::to_string(number) + ": empty key");
        }
        RawValue raw;
        raw.line = number;
        if (!value.empty() && value.front() == '[') {
            if (value.back() != ']') {
                throw ConfigError(key, "unterminated list");
            }
            raw.is_list = true;
            std::string_view body = value.substr(1, value.size() - 2);
            while (!trim(body).empty()) {
                const auto comma = body.find(',');
                raw.items.push_back(unquote(trim(body.substr(0, comma))));
                if (comma == std::string_view::npos) {
                    break;
                }
                body = body.substr(comma + 1);
            }
        } else {
            raw.items.push_back(unquote(value));
        }
        if (!entries.emplace(key, std::move(raw)).second) {
            throw ConfigError(key, "duplicate key");
        }
    }
    return entries;
}

double to_double(const std::string& key, const std::string& s) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) {
        throw ConfigError(key, "expected a number, got '" + s + "'");
    }
    return value;
}

std::uint64_t to_unsigned(const std::string& key, const std::string& s) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size()) {
        throw ConfigError(key, "expected a non-negative integer, got '" + s + "'");
    }
    return value;
}

class Reader {
public:
    explicit Reader(std::map<std::string, RawValue> entries) : entries_(std::move(entries)) {}

    const RawValue* take(const std::string& key) {
        const auto it = entries_.find(key);
        if (it == entries_.end()) {
            return nullptr;
        }
        taken_.insert(key);
        return &it->second;
    }

    const std::string* scalar(const std::string& key) {
        const RawValue* raw = take(key);
        if (raw == nullptr) {
            return nullptr;
        }
        if (raw->is_list || raw->items.size() != 1) {
            throw ConfigError(key, "expected a single value");
        }
        return &raw->items.front();
    }

    void number(const std::string& key, double& out) {
        if (const auto* s = scalar(key)) out = to_double(key, *s);
    }

    template <typename T>
    void count(const std::string& key, T& out) {
        if (const auto* s = scalar(key)) out = static_cast<T>(to_unsigned(key, *s));
    }

    void numbers(const std::string& key, std::vector<double>& out) {
        if (const RawValue* raw = take(key)) {
            out.clear();
            for (const auto& item : raw->items) {
                out.push_back(to_double(key, item));
            }
        }
    }

    void words(const std::string& key, std::vector<std::string>& out) {
        if (const RawValue* raw = take(key)) {
            out = raw->items;
        }
    }

    void reject_unknown() const {
        for (const auto& [key, raw] : entries_) {
            if (!taken_.contains(key)) {
                throw ConfigError(key, "unknown key (line " + std::to_string(raw.line) + ")");
            }
        }
    }

private:
    std::map<std::string, RawValue> entries_;
    std::set<std::string> taken_;
};

}  // namespace

std::vector<ScenarioSpec> SimulationConfig::scenarios() const {
    std::vector<ScenarioSpec> out;
    for (const auto& label : scenario_labels) {
        if (label == "DBADA") {
            for (double beta : betas) {
                out.push_back(ScenarioSpec::dbada(beta));
            }
        } else {
            out.push_back(parse_scenario(label));
        }
    }
    return out;
}

void validate(const SimulationConfig& config) {
    try {
        build_layout(config.layout);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("layout", e.what());
    }
    if (config.layout.hotspots > kMaxSwitchablePicos) {
        throw ConfigError("layout.hotspots",
                          "at most " + std::to_string(kMaxSwitchablePicos) + " HotSpots");
    }
    try {
        validate(config.energy);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("energy", e.what());
    }
    if (!(config.rate.total_bandwidth_hz > 0.0)) {
        throw ConfigError("system_bandwidth_hz", "must be positive");
    }
    if (!(config.rate.noise_psd_w_per_hz > 0.0)) {
        throw ConfigError("noise_psd_dbm_per_hz", "must be finite");
    }
    if (!(config.pfs.tolerance > 0.0 && config.pfs.tolerance < 1.0)) {
        throw ConfigError("solver.tolerance", "must lie in (0, 1)");
    }
    try {
        validate(config.traffic);
    } catch (const std::invalid_argument& e) {
        throw ConfigError("traffic", e.what());
    }
    bool has_hotspot_users = false;
    for (double m : config.traffic.hotspot_means) {
        has_hotspot_users = has_hotspot_users || m > 0.0;
    }
    if (has_hotspot_users && config.layout.hotspots == 0) {
        throw ConfigError("traffic.hotspot_means", "HotSpot users need layout.hotspots > 0");
    }
    if (config.drops_per_hour == 0) {
        throw ConfigError("drops_per_hour", "must be at least 1");
    }
    if (config.scenario_labels.empty()) {
        throw ConfigError("scenarios.list", "no scenarios");
    }
    for (double beta : config.betas) {
        if (!(beta >= 0.0)) {
            throw ConfigError("scenarios.beta", "prices must be non-negative");
        }
    }
    std::vector<ScenarioSpec> specs;
    try {
        specs = config.scenarios();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("scenarios.list", e.what());
    }
    std::set<std::string> labels;
    for (const auto& s : specs) {
        if (!labels.insert(s.label()).second) {
            throw ConfigError("scenarios.list", "duplicate scenario " + s.label());
        }
    }
}

SimulationConfig parse_config(std::string_view text) {
    Reader r(tokenize(text));
    SimulationConfig c;

    r.count("seed", c.seed);
    r.count("drops_per_hour", c.drops_per_hour);
    r.count("workers", c.workers);
    r.number("system_bandwidth_hz", c.rate.total_bandwidth_hz);
    if (const auto* s = r.scalar("noise_psd_dbm_per_hz")) {
        c.rate.noise_psd_w_per_hz = dbm_to_watts(to_double("noise_psd_dbm_per_hz", *s));
    }
    r.number("solver.tolerance", c.pfs.tolerance);

    r.count("layout.sectors", c.layout.sectors_per_macro);
    r.count("layout.hotspots", c.layout.hotspots);
    r.number("layout.cell_radius_m", c.layout.cell_radius_m);
    r.number("layout.hotspot_fraction", c.layout.hotspot_fraction);
    r.number("layout.hotspot_radius_m", c.layout.hotspot_radius_m);
    r.number("layout.min_dist_macro_m", c.layout.min_dist_macro_m);
    r.number("layout.min_dist_pico_m", c.layout.min_dist_pico_m);

    r.number("radio.macro_tx_power_dbm", c.radio.macro.tx_power_dbm);
    r.number("radio.macro_antenna_gain_dbi", c.radio.macro.antenna_gain_dbi);
    r.number("radio.pico_tx_power_dbm", c.radio.pico.tx_power_dbm);
    r.number("radio.pico_antenna_gain_dbi", c.radio.pico.antenna_gain_dbi);

    r.number("energy.macro_power_w", c.energy.macro_power_w);
    r.number("energy.pico_active_w", c.energy.pico_active_w);
    r.number("energy.pico_idle_w", c.energy.pico_idle_w);
    c.energy.sectors = c.layout.sectors_per_macro;
    c.radio.macro.active_power_w = c.energy.macro_power_w;
    c.radio.pico.active_power_w = c.energy.pico_active_w;
    c.radio.pico.idle_power_w = c.energy.pico_idle_w;

    r.numbers("traffic.macro_means", c.traffic.macro_means);
    r.numbers("traffic.hotspot_means", c.traffic.hotspot_means);
    r.number("traffic.fluctuation", c.traffic.fluctuation_fraction);

    r.words("scenarios.list", c.scenario_labels);
    r.numbers("scenarios.beta", c.betas);

    r.reject_unknown();
    validate(c);
    return c;
}

SimulationConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("", "cannot open config file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

}  // namespace hetnet
