#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "iqucs/encoding.hpp"
#include "iqucs/grover.hpp"
#include "iqucs/search.hpp"

namespace iqucs {

struct BaselineOutcome {
    std::set<int> predicted;          // original indexes at/above the filter threshold
    std::map<int, double> fidelities; // original index -> estimated pair probability
    int invocations = 0;              // precomputed optimal round count I
    int total_qubits = 0;             // register width N_q
};

// Single-shot Grover over the full dataset: prepare the whole register
// uniformly (the textbook all-Hadamard start), run the precomputed optimal
// number of rounds for the known target count, then apply the same
// mean-based filter the iterative method uses. The target count is oracle
// knowledge granted to this method only; target identities still enter
// solely through the marking oracle.
inline BaselineOutcome gsearch(std::vector<PairRecord> records, const TargetSet& targets,
                               const FilterConfig& config, const InvocationObserver& observer = {}) {
    detail::check_filter_config(config);
    detail::check_targets_present(records, targets);

    ProblemInstance instance = gen_indexes(records, 1);
    const std::vector<BasisCode> pair_codes = encode_instance(instance);
    const std::vector<BasisCode> marked = detail::marked_codes(instance, targets);
    const int total_qubits = instance.idx_qubits + instance.val_qubits;
    const int invocations =
        grover::optimal_num_invocations(total_qubits, static_cast<int>(targets.values.size()));

    std::vector<BasisCode> full_register(std::size_t{1} << total_qubits);
    for (std::size_t code = 0; code < full_register.size(); ++code) {
        full_register[code] = static_cast<BasisCode>(code);
    }

    int cumulative_invocations = 0;
    const std::map<BasisCode, double> estimates = detail::amplify_and_estimate(
        instance, pair_codes, std::move(full_register), marked, invocations, total_qubits, config,
        kBaselineStreamTag, 1, cumulative_invocations, observer);

    BaselineOutcome outcome;
    outcome.invocations = invocations;
    outcome.total_qubits = total_qubits;
    for (std::size_t p = 0; p < instance.pairs.size(); ++p) {
        outcome.fidelities[instance.pairs[p].original_index] = estimates.at(pair_codes[p]);
    }
    outcome.predicted =
        classify(outcome.fidelities, filter_threshold(instance.pairs.size(), config.threshold_ts))
            .first;
    return outcome;
}

} // namespace iqucs
