#include "hetnet/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "hetnet/format.hpp"

namespace hetnet {

RandomEngine make_stream(std::uint64_t master_seed, std::size_t hour_index, std::size_t drop) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                      static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(hour_index),
                      static_cast<std::uint32_t>(drop),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(drop) >> 32)};
    return RandomEngine(seq);
}

namespace {

struct WorkItem {
    std::size_t hour_index;
    std::size_t drop;
};

std::vector<MetricsRecord> run_drop(const SimulationConfig& config, const NetworkLayout& layout,
                                    std::span<const ScenarioSpec> specs, const WorkItem& item,
                                    const DropObserver& observer) {
    RandomEngine rng = make_stream(config.seed, item.hour_index, item.drop);
    const UserCounts counts = user_counts(config.traffic, item.hour_index, rng);
    const UserSet users = drop_users(layout, counts.n_macro, counts.n_hotspot, rng);
    const LinkGainTable gains = link_gains(layout, users, config.radio);

    EvaluationOptions options;
    options.pfs = config.pfs;

    const bool wants_dbada = std::any_of(specs.begin(), specs.end(), [](const ScenarioSpec& s) {
        return s.kind == ScenarioKind::dbada;
    });
    std::vector<StateEvaluation> enumeration;
    std::vector<StateScore> candidates;
    if (wants_dbada) {
        enumeration = enumerate_states(gains, config.rate, config.energy, 0.0, options);
        candidates = scores(enumeration);
    }

    std::vector<StateEvaluation> evaluations;
    evaluations.reserve(specs.size());
    for (const auto& spec : specs) {
        if (spec.kind == ScenarioKind::dbada) {
            StateEvaluation best = enumeration[select_best(candidates, spec.beta)];
            best.beta = spec.beta;
            best.objective = objective_at(best, spec.beta);
            evaluations.push_back(std::move(best));
        } else {
            evaluations.push_back(run_scenario(spec, gains, config.rate, config.energy, options));
        }
    }

    if (observer) {
        DropContext ctx;
        ctx.hour_index = item.hour_index;
        ctx.drop = item.drop;
        ctx.counts = counts;
        ctx.users = &users;
        ctx.gains = &gains;
        ctx.specs = specs;
        ctx.evaluations = evaluations;
        ctx.enumeration = enumeration;
        observer(ctx);
    }

    std::vector<MetricsRecord> records;
    records.reserve(specs.size());
    for (std::size_t s = 0; s < specs.size(); ++s) {
        records.push_back(
            drop_metrics(evaluations[s], item.hour_index + 1, item.drop, specs[s].label()));
    }
    return records;
}

}  // namespace

CampaignResult run_campaign(const SimulationConfig& config, const DropObserver& observer) {
    validate(config);
    const NetworkLayout layout = build_layout(config.layout);
    const std::vector<ScenarioSpec> specs = config.scenarios();

    std::vector<WorkItem> items;
    for (std::size_t h = 0; h < config.traffic.hours(); ++h) {
        for (std::size_t d = 0; d < config.drops_per_hour; ++d) {
            items.push_back({h, d});
        }
    }

    std::vector<std::vector<MetricsRecord>> per_item(items.size());
    std::vector<std::exception_ptr> failures(items.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size() || failed.load()) {
                return;
            }
            try {
                per_item[i] = run_drop(config, layout, specs, items[i], observer);
            } catch (...) {
                failures[i] = std::current_exception();
                failed.store(true);
            }
        }
    };

    std::size_t workers = config.workers;
    if (workers == 0) {
        workers = std::max(1U, std::thread::hardware_concurrency());
    }
    workers = std::min(workers, items.size());
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }

    CampaignResult result;
    for (auto& recs : per_item) {
        result.records.insert(result.records.end(), recs.begin(), recs.end());
    }

    for (const auto& spec : specs) {
        const std::string label = spec.label();
        std::vector<MetricsRecord> mine;
        for (const auto& r : result.records) {
            if (r.scenario == label) {
                mine.push_back(r);
            }
        }
        result.summaries.push_back(aggregate(mine));
    }

    std::vector<ScenarioSummary> baselines;
    for (std::size_t s = 0; s < specs.size(); ++s) {
        if (specs[s].kind != ScenarioKind::dbada) {
            baselines.push_back(result.summaries[s]);
        }
    }
    for (std::size_t s = 0; s < specs.size(); ++s) {
        if (specs[s].kind == ScenarioKind::dbada) {
            auto rows = improvement_table(result.summaries[s], baselines);
            result.improvements.insert(result.improvements.end(), rows.begin(), rows.end());
        }
    }
    return result;
}

std::string records_csv(std::span<const MetricsRecord> records) {
    std::string out = "hour,drop,scenario,sum_rate_bps,median_rate_bps,p10_rate_bps,power_w\n";
    for (const auto& r : records) {
        out += std::to_string(r.hour) + ',' + std::to_string(r.drop) + ',' + r.scenario + ',' +
               format_double(r.sum_rate_bps) + ',' + format_double(r.median_rate_bps) + ',' +
               format_double(r.p10_rate_bps) + ',' + format_double(r.power_w) + '\n';
    }
    return out;
}

std::string summary_csv(std::span<const ScenarioSummary> summaries) {
    std::string out =
        "scenario,records,avg_sum_rate_bps,avg_median_rate_bps,avg_p10_rate_bps,avg_power_w,"
        "energy_per_sum,energy_per_median,energy_per_p10\n";
    for (const auto& s : summaries) {
        out += s.scenario + ',' + std::to_string(s.records) + ',' +
               format_double(s.avg_sum_rate_bps) + ',' + format_double(s.avg_median_rate_bps) +
               ',' + format_double(s.avg_p10_rate_bps) + ',' + format_double(s.avg_power_w) +
               ',' + format_double(s.energy_per_sum) + ',' + format_double(s.energy_per_median) +
               ',' + format_double(s.energy_per_p10) + '\n';
    }
    return out;
}

std::string improvement_csv(std::span<const ImprovementRow> rows) {
    std::string out =
        "dbada,baseline,energy_per_sum_pct,energy_per_median_pct,energy_per_p10_pct\n";
    for (const auto& r : rows) {
        out += r.dbada + ',' + r.baseline + ',' + format_double(r.energy_per_sum_pct) + ',' +
               format_double(r.energy_per_median_pct) + ',' +
               format_double(r.energy_per_p10_pct) + '\n';
    }
    return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

}  // namespace

void write_outputs(const CampaignResult& result, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
    }
    write_file(out_dir / "records.csv", records_csv(result.records));
    write_file(out_dir / "summary.csv", summary_csv(result.summaries));
    write_file(out_dir / "improvement.csv", improvement_csv(result.improvements));
}

}  // namespace hetnet
