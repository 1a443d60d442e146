#pragma once

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "iqucs/search.hpp"

namespace iqucs {

// One accounting row: a register width and how many rounds ran at that width.
struct CqcEntry {
    int qubits = 0;
    int invocations = 0;
};

struct CqcTrace {
    std::vector<CqcEntry> entries;
};

// Cumulative qubit consumption: sum of width x rounds over the trace.
inline std::int64_t cqc(const CqcTrace& trace) {
    if (trace.entries.empty()) {
        throw std::invalid_argument("cqc: empty trace");
    }
    std::int64_t total = 0;
    for (const CqcEntry& entry : trace.entries) {
        if (entry.qubits <= 0 || entry.invocations <= 0) {
            throw std::invalid_argument("cqc: trace entries must be positive");
        }
        total += static_cast<std::int64_t>(entry.qubits) * entry.invocations;
    }
    return total;
}

inline CqcTrace cqc_trace_of(const std::vector<IterationRecord>& trace) {
    CqcTrace out;
    out.entries.reserve(trace.size());
    for (const IterationRecord& entry : trace) {
        out.entries.push_back(CqcEntry{entry.total_qubits, entry.invocations});
    }
    return out;
}

// Classification accuracy over the whole dataset: every false positive and
// every false negative costs one point out of dataset_size.
inline double accuracy(const std::set<int>& predicted, const std::set<int>& truth,
                       std::size_t dataset_size) {
    if (dataset_size == 0) {
        throw std::invalid_argument("accuracy: dataset_size must be >= 1");
    }
    std::size_t false_positives = 0;
    for (int p : predicted) {
        if (!truth.count(p)) {
            ++false_positives;
        }
    }
    std::size_t false_negatives = 0;
    for (int t : truth) {
        if (!predicted.count(t)) {
            ++false_negatives;
        }
    }
    return static_cast<double>(dataset_size - false_positives - false_negatives) /
           static_cast<double>(dataset_size);
}

// Relative qubit saving in percent, rounded to one decimal.
inline double reduction(std::int64_t baseline_cqc, std::int64_t iterative_cqc) {
    if (baseline_cqc <= 0) {
        throw std::invalid_argument("reduction: baseline CQC must be positive");
    }
    const double raw = 100.0 * (1.0 - static_cast<double>(iterative_cqc) /
                                          static_cast<double>(baseline_cqc));
    return std::round(raw * 10.0) / 10.0;
}

struct ComparisonReport {
    std::int64_t baseline_cqc = 0;
    std::int64_t iqucs_cqc = 0;
    double reduction_pct = 0.0;
    double baseline_accuracy = 0.0;
    double iqucs_accuracy = 0.0;
    int baseline_invocations = 0;
    int iqucs_invocations = 0;
};

} // namespace iqucs
