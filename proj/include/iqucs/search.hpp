#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iqucs/encoding.hpp"
#include "iqucs/grover.hpp"
#include "iqucs/random.hpp"

namespace iqucs {

// Measurement and filter stage settings, shared by both search methods.
struct FilterConfig {
    double threshold_ts = 0.85;  // T_s
    std::uint64_t shots = 12000; // 0 = use exact probabilities
    std::uint64_t seed = 0;
    int max_iterations = 50; // hard cap on the iterative loop
};

struct IterationRecord {
    int iteration = 0;
    int invocations = 0;     // rounds this iteration
    int total_qubits = 0;    // register width this iteration
    double threshold_value = 0.0;
    std::map<int, double> fidelities; // original index -> estimated pair probability
    std::set<int> potential;          // kept (original indexes)
    std::set<int> filtered;           // dropped (original indexes)
};

struct SearchOutcome {
    std::set<int> solution_original_indexes;
    std::vector<IterationRecord> trace;
    bool converged = false;
    int iterations_used = 0;
};

// Fires after every Grover invocation with the current working set, the
// cumulative invocation count for this run, and the estimated probability of
// each working-set pair code. In sampled mode the estimates come from an
// independent seeded draw per invocation; the draw after an iteration's last
// invocation is the same one the filter uses, so observing never perturbs
// the search.
using InvocationObserver = std::function<void(const ProblemInstance&, int cumulative_invocation,
                                              const std::map<BasisCode, double>&)>;

// Stream tags keeping the two methods' sampling independent under one seed.
inline constexpr std::uint64_t kIterativeStreamTag = 1;
inline constexpr std::uint64_t kBaselineStreamTag = 2;

// Odd iterations run the Grover operator once, even iterations twice.
inline int invocations_for(int iteration) {
    if (iteration < 1) {
        throw std::invalid_argument("invocations_for: iteration must be >= 1");
    }
    return ((iteration + 1) % 2) + 1;
}

// Cutoff below which a record is dropped: the uniform probability over the
// padded register, scaled by T_s. Note the exponent is the raw ceiling log
// (a one-element set gives T_s itself, not T_s/2).
inline double filter_threshold(std::size_t set_size, double threshold_ts) {
    const double levels = static_cast<double>(std::uint64_t{1} << ceil_log2(set_size));
    return threshold_ts / levels;
}

// Partition by fidelity: strictly below the threshold is filtered out,
// at or above is kept as a potential solution.
inline std::pair<std::set<int>, std::set<int>> classify(const std::map<int, double>& fidelities,
                                                        double threshold_value) {
    std::pair<std::set<int>, std::set<int>> split;
    for (const auto& [original_index, fidelity] : fidelities) {
        if (fidelity < threshold_value) {
            split.second.insert(original_index);
        } else {
            split.first.insert(original_index);
        }
    }
    return split;
}

namespace detail {

inline void check_filter_config(const FilterConfig& config) {
    if (!(config.threshold_ts > 0.0) || config.threshold_ts > 1.0) {
        throw std::invalid_argument("threshold_ts must be in (0, 1]");
    }
    if (config.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
}

inline void check_targets_present(const std::vector<PairRecord>& records,
                                  const TargetSet& targets) {
    if (targets.values.empty()) {
        throw std::invalid_argument("target set is empty");
    }
    std::set<int> present;
    for (const PairRecord& rec : records) {
        present.insert(rec.original_value);
    }
    for (int value : targets.values) {
        if (!present.count(value)) {
            throw std::invalid_argument("target value " + std::to_string(value) +
                                        " does not occur in the data set");
        }
    }
}

// Codes of the working-set records whose original value is a target. May be
// empty if every target has been filtered out; amplification then degenerates
// to the identity and the uniform fidelities keep the remaining records.
inline std::vector<BasisCode> marked_codes(const ProblemInstance& instance,
                                           const TargetSet& targets) {
    std::vector<BasisCode> marked;
    for (const PairRecord& rec : instance.pairs) {
        if (targets.values.count(rec.original_value)) {
            marked.push_back(encode_pair(rec, instance.idx_qubits, instance.val_qubits));
        }
    }
    return marked;
}

// Runs one amplification pass over `prep` (invocation by invocation),
// reports each intermediate state to the observer, and returns the estimated
// probability of every working-set code after the final invocation.
inline std::map<BasisCode, double> amplify_and_estimate(
    const ProblemInstance& instance, const std::vector<BasisCode>& pair_codes,
    std::vector<BasisCode> prep, const std::vector<BasisCode>& marked, int invocations,
    int num_qubits, const FilterConfig& config, std::uint64_t stream_tag, int iteration,
    int& cumulative_invocations, const InvocationObserver& observer) {
    grover::GroverRun job;
    job.prep_subset = std::move(prep);
    job.marked = marked;
    job.invocations = invocations;
    job.num_qubits = num_qubits;
    grover::Amplifier amp(job);

    std::map<BasisCode, double> last_estimates;
    for (int step = 1; step <= invocations; ++step) {
        amp.step();
        ++cumulative_invocations;
        const bool is_last = step == invocations;
        if (!observer && !is_last) {
            continue;
        }
        std::map<BasisCode, double> estimates;
        if (config.shots == 0) {
            estimates = amp.state().probabilities(pair_codes);
        } else {
            const std::uint64_t draw_seed =
                rng::mix({config.seed, stream_tag, static_cast<std::uint64_t>(iteration),
                          static_cast<std::uint64_t>(cumulative_invocations)});
            estimates = grover::sampled_estimates(amp.state(), pair_codes, config.shots, draw_seed);
        }
        if (observer) {
            observer(instance, cumulative_invocations, estimates);
        }
        if (is_last) {
            last_estimates = std::move(estimates);
        }
    }
    return last_estimates;
}

} // namespace detail

// The iterative search. Each iteration re-encodes the surviving records into
// the smallest registers that hold them, amplifies the target codes over the
// valid-pair superposition, measures, and filters low-fidelity records out
// for good. The loop stops when the potential-solution set repeats; a run
// that empties its working set or hits the iteration cap comes back with
// converged = false rather than an exception.
inline SearchOutcome search(std::vector<PairRecord> records, const TargetSet& targets,
                            const FilterConfig& config, const InvocationObserver& observer = {}) {
    detail::check_filter_config(config);
    detail::check_targets_present(records, targets);

    SearchOutcome outcome;
    std::optional<std::set<int>> previous_potential;
    int cumulative_invocations = 0;

    for (int iteration = 1; iteration <= config.max_iterations; ++iteration) {
        if (iteration > 1 &&
            std::none_of(records.begin(), records.end(),
                         [](const PairRecord& rec) { return rec.alive(); })) {
            outcome.iterations_used = iteration - 1;
            return outcome; // everything filtered: failed search
        }

        ProblemInstance instance = gen_indexes(records, iteration);
        const std::vector<BasisCode> pair_codes = encode_instance(instance);
        const std::vector<BasisCode> marked = detail::marked_codes(instance, targets);
        const int invocations = invocations_for(iteration);
        const int total_qubits = instance.idx_qubits + instance.val_qubits;

        const std::map<BasisCode, double> estimates = detail::amplify_and_estimate(
            instance, pair_codes, pair_codes, marked, invocations, total_qubits, config,
            kIterativeStreamTag, iteration, cumulative_invocations, observer);

        IterationRecord entry;
        entry.iteration = iteration;
        entry.invocations = invocations;
        entry.total_qubits = total_qubits;
        entry.threshold_value = filter_threshold(instance.pairs.size(), config.threshold_ts);
        for (std::size_t p = 0; p < instance.pairs.size(); ++p) {
            entry.fidelities[instance.pairs[p].original_index] = estimates.at(pair_codes[p]);
        }
        auto [potential, filtered] = classify(entry.fidelities, entry.threshold_value);
        for (PairRecord& rec : records) {
            if (filtered.count(rec.original_index)) {
                rec.current_index = -1;
            }
        }
        entry.potential = potential;
        entry.filtered = std::move(filtered);
        outcome.trace.push_back(std::move(entry));
        outcome.iterations_used = iteration;

        if (previous_potential && *previous_potential == potential) {
            outcome.converged = true;
            outcome.solution_original_indexes = std::move(potential);
            return outcome;
        }
        previous_potential = std::move(potential);
    }

    // Iteration cap hit: report the latest potential set without claiming
    // convergence.
    if (previous_potential) {
        outcome.solution_original_indexes = std::move(*previous_potential);
    }
    return outcome;
}

} // namespace iqucs
