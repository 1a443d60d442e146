#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "iqucs/baseline.hpp"
#include "iqucs/encoding.hpp"
#include "iqucs/metrics.hpp"
#include "iqucs/random.hpp"
#include "iqucs/search.hpp"

namespace iqucs {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDegenerate = 1;
inline constexpr int kExitInvalidConfig = 2;

// One experiment = one dataset, one target set, one or both methods.
struct RunConfig {
    std::size_t dataset_size = 10;
    std::vector<int> target_values; // explicit target values; empty = seeded pick
    int num_targets = 0;            // seeded pick count, drawn with target_seed
    std::uint64_t target_seed = 0;
    std::string mode = "both"; // iqucs | gsearch | both
    std::uint64_t shots = 12000;
    double threshold_ts = 0.85;
    std::uint64_t seed = 0;
    std::string wordlist_path; // empty = built-in corpus
    std::string output_dir = ".";
    int max_iterations = 50;
};

// Rounds to 12 significant digits so reported numbers do not wobble with
// last-ulp libm differences between platforms.
inline double round_for_report(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

// Resolves the target values: the explicit list if given (validated), else a
// seeded draw of num_targets distinct values.
inline std::vector<int> select_targets(const RunConfig& config) {
    if (!config.target_values.empty()) {
        std::set<int> seen;
        for (int value : config.target_values) {
            if (value < 0 || static_cast<std::size_t>(value) >= config.dataset_size) {
                throw std::invalid_argument("target value " + std::to_string(value) +
                                            " outside the data set value range");
            }
            if (!seen.insert(value).second) {
                throw std::invalid_argument("duplicate target value " + std::to_string(value));
            }
        }
        return config.target_values;
    }
    if (config.num_targets < 1) {
        throw std::invalid_argument("specify target values or a positive target count");
    }
    if (static_cast<std::size_t>(config.num_targets) > config.dataset_size) {
        throw std::invalid_argument("target count exceeds the data set size");
    }
    const auto draw = rng::sample_without_replacement(
        config.dataset_size, static_cast<std::uint64_t>(config.num_targets), config.target_seed);
    std::vector<int> values;
    values.reserve(draw.size());
    for (std::uint64_t v : draw) {
        values.push_back(static_cast<int>(v));
    }
    return values;
}

struct HistogramRow {
    BasisCode pair_code = 0;
    int original_index = 0;
    int original_value = 0;
    int current_index = 0;
    int current_value = 0;
    double probability = 0.0;
    bool filtered = false;
};

// One CSV per Grover invocation; working-set records only, sorted by
// original index. Written in binary mode so line endings are stable.
inline void write_histogram_csv(const std::filesystem::path& path,
                                std::vector<HistogramRow> rows) {
    std::sort(rows.begin(), rows.end(), [](const HistogramRow& a, const HistogramRow& b) {
        return a.original_index < b.original_index;
    });
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "pair_code,original_index,original_value,current_index,current_value,probability,"
           "filtered\n";
    char prob[40];
    for (const HistogramRow& row : rows) {
        std::snprintf(prob, sizeof prob, "%.12g", row.probability);
        out << row.pair_code << ',' << row.original_index << ',' << row.original_value << ','
            << row.current_index << ',' << row.current_value << ',' << prob << ','
            << (row.filtered ? 1 : 0) << '\n';
    }
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

namespace detail {

struct InvocationSnapshot {
    int iteration = 0;
    int cumulative_invocation = 0;
    ProblemInstance instance;
    std::map<BasisCode, double> estimates;
};

inline InvocationObserver collect_into(std::vector<InvocationSnapshot>& sink) {
    return [&sink](const ProblemInstance& instance, int cumulative_invocation,
                   const std::map<BasisCode, double>& estimates) {
        sink.push_back(
            InvocationSnapshot{instance.iteration, cumulative_invocation, instance, estimates});
    };
}

// filtered_at_end holds the original indexes the snapshot's iteration ends up
// dropping; every row of that iteration carries the flag.
inline std::vector<HistogramRow> snapshot_rows(const InvocationSnapshot& snap,
                                               const std::set<int>& filtered_at_end) {
    std::vector<HistogramRow> rows;
    rows.reserve(snap.instance.pairs.size());
    for (const PairRecord& rec : snap.instance.pairs) {
        const BasisCode code = encode_pair(rec, snap.instance.idx_qubits, snap.instance.val_qubits);
        const auto it = snap.estimates.find(code);
        rows.push_back(HistogramRow{code, rec.original_index, rec.original_value,
                                    rec.current_index, rec.current_value,
                                    it == snap.estimates.end() ? 0.0 : it->second,
                                    filtered_at_end.count(rec.original_index) > 0});
    }
    return rows;
}

using ReportJson = nlohmann::ordered_json;

inline ReportJson fidelities_json(const std::map<int, double>& fidelities) {
    ReportJson out = ReportJson::object();
    for (const auto& [original_index, fidelity] : fidelities) {
        out[std::to_string(original_index)] = round_for_report(fidelity);
    }
    return out;
}

inline ReportJson int_set_json(const std::set<int>& values) {
    return ReportJson(std::vector<int>(values.begin(), values.end()));
}

} // namespace detail

// Runs the configured experiment, writes report.json plus one histogram CSV
// per Grover invocation into output_dir, and returns the process exit code:
// 0 on success, 1 when the iterative search fails to converge (the report is
// still written), 2 on an invalid configuration.
inline int run_experiment(const RunConfig& config) {
    namespace fs = std::filesystem;
    const bool run_iterative = config.mode == "iqucs" || config.mode == "both";
    const bool run_baseline = config.mode == "gsearch" || config.mode == "both";
    try {
        if (!run_iterative && !run_baseline) {
            throw std::invalid_argument("mode must be one of: iqucs, gsearch, both");
        }
        if (config.dataset_size == 0) {
            throw std::invalid_argument("dataset size must be >= 1");
        }
        FilterConfig filter;
        filter.threshold_ts = config.threshold_ts;
        filter.shots = config.shots;
        filter.seed = config.seed;
        filter.max_iterations = config.max_iterations;
        detail::check_filter_config(filter);

        const std::vector<PairRecord> records =
            load_wordlist(config.wordlist_path, config.dataset_size);
        const std::vector<int> target_values = select_targets(config);
        TargetSet targets;
        targets.values.insert(target_values.begin(), target_values.end());

        std::set<int> truth;
        for (const PairRecord& rec : records) {
            if (targets.values.count(rec.original_value)) {
                truth.insert(rec.original_index);
            }
        }

        const fs::path out_dir = config.output_dir.empty() ? fs::path(".")
                                                           : fs::path(config.output_dir);
        fs::create_directories(out_dir);

        detail::ReportJson report;
        report["config"] = {
            {"dataset_size", config.dataset_size},
            {"mode", config.mode},
            {"shots", config.shots},
            {"threshold_ts", round_for_report(config.threshold_ts)},
            {"seed", config.seed},
            {"max_iterations", config.max_iterations},
            {"wordlist", config.wordlist_path.empty() ? "builtin" : config.wordlist_path},
            {"target_selection", config.target_values.empty() ? "seeded" : "explicit"},
            {"num_targets", targets.values.size()},
            {"target_seed", config.target_seed},
            {"target_values", detail::int_set_json(targets.values)},
        };
        report["truth_original_indexes"] = detail::int_set_json(truth);

        std::optional<BaselineOutcome> baseline_outcome;
        std::optional<SearchOutcome> search_outcome;
        std::vector<detail::InvocationSnapshot> snapshots;

        if (run_baseline) {
            snapshots.clear();
            baseline_outcome = gsearch(records, targets, filter, detail::collect_into(snapshots));
            std::set<int> dropped;
            for (const auto& [original_index, fidelity] : baseline_outcome->fidelities) {
                if (!baseline_outcome->predicted.count(original_index)) {
                    dropped.insert(original_index);
                }
            }
            for (const detail::InvocationSnapshot& snap : snapshots) {
                const fs::path path = out_dir / ("gsearch_iter" + std::to_string(snap.iteration) +
                                                 "_inv" + std::to_string(snap.cumulative_invocation) +
                                                 ".csv");
                write_histogram_csv(path, detail::snapshot_rows(snap, dropped));
            }
            const std::int64_t baseline_cqc = cqc(
                CqcTrace{{CqcEntry{baseline_outcome->total_qubits, baseline_outcome->invocations}}});
            report["gsearch"] = {
                {"predicted_original_indexes", detail::int_set_json(baseline_outcome->predicted)},
                {"fidelities", detail::fidelities_json(baseline_outcome->fidelities)},
                {"invocations", baseline_outcome->invocations},
                {"total_qubits", baseline_outcome->total_qubits},
                {"cqc", baseline_cqc},
                {"accuracy",
                 round_for_report(accuracy(baseline_outcome->predicted, truth, records.size()))},
            };
        }

        if (run_iterative) {
            snapshots.clear();
            search_outcome = search(records, targets, filter, detail::collect_into(snapshots));
            for (const detail::InvocationSnapshot& snap : snapshots) {
                const fs::path path = out_dir / ("iqucs_iter" + std::to_string(snap.iteration) +
                                                 "_inv" + std::to_string(snap.cumulative_invocation) +
                                                 ".csv");
                const std::set<int>& dropped =
                    search_outcome->trace.at(static_cast<std::size_t>(snap.iteration) - 1).filtered;
                write_histogram_csv(path, detail::snapshot_rows(snap, dropped));
            }
            detail::ReportJson trace_json = detail::ReportJson::array();
            int total_invocations = 0;
            for (const IterationRecord& entry : search_outcome->trace) {
                total_invocations += entry.invocations;
                trace_json.push_back({
                    {"iteration", entry.iteration},
                    {"invocations", entry.invocations},
                    {"total_qubits", entry.total_qubits},
                    {"threshold_value", round_for_report(entry.threshold_value)},
                    {"fidelities", detail::fidelities_json(entry.fidelities)},
                    {"potential", detail::int_set_json(entry.potential)},
                    {"filtered", detail::int_set_json(entry.filtered)},
                });
            }
            report["iqucs"] = {
                {"solution_original_indexes",
                 detail::int_set_json(search_outcome->solution_original_indexes)},
                {"converged", search_outcome->converged},
                {"iterations_used", search_outcome->iterations_used},
                {"total_invocations", total_invocations},
                {"cqc", cqc(cqc_trace_of(search_outcome->trace))},
                {"accuracy", round_for_report(accuracy(search_outcome->solution_original_indexes,
                                                       truth, records.size()))},
                {"trace", std::move(trace_json)},
            };
        }

        if (run_baseline && run_iterative) {
            ComparisonReport cmp;
            cmp.baseline_cqc = report["gsearch"]["cqc"].get<std::int64_t>();
            cmp.iqucs_cqc = report["iqucs"]["cqc"].get<std::int64_t>();
            cmp.reduction_pct = reduction(cmp.baseline_cqc, cmp.iqucs_cqc);
            cmp.baseline_accuracy = report["gsearch"]["accuracy"].get<double>();
            cmp.iqucs_accuracy = report["iqucs"]["accuracy"].get<double>();
            cmp.baseline_invocations = baseline_outcome->invocations;
            cmp.iqucs_invocations = report["iqucs"]["total_invocations"].get<int>();
            report["comparison"] = {
                {"baseline_cqc", cmp.baseline_cqc},
                {"iqucs_cqc", cmp.iqucs_cqc},
                {"reduction_pct", round_for_report(cmp.reduction_pct)},
                {"baseline_accuracy", cmp.baseline_accuracy},
                {"iqucs_accuracy", cmp.iqucs_accuracy},
                {"baseline_invocations", cmp.baseline_invocations},
                {"iqucs_invocations", cmp.iqucs_invocations},
            };
        }

        {
            std::ofstream out(out_dir / "report.json", std::ios::binary);
            if (!out) {
                throw std::runtime_error("cannot write " + (out_dir / "report.json").string());
            }
            out << report.dump(2) << '\n';
            out.flush();
            if (!out) {
                throw std::runtime_error("failed writing " + (out_dir / "report.json").string());
            }
        }

        const bool degenerate = run_iterative && !search_outcome->converged;
        return degenerate ? kExitDegenerate : kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }
}

} // namespace iqucs
