#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "iqucs/statevector.hpp"

namespace iqucs::grover {

// One amplitude-amplification job: the preparation subset (the working set of
// encoded pairs, or the full register for the single-shot baseline), the
// marked target codes, and the number of oracle+diffusion rounds.
struct GroverRun {
    std::vector<BasisCode> prep_subset;
    std::vector<BasisCode> marked; // must be a subset of prep_subset
    int invocations = 0;
    int num_qubits = 0;
};

// Applies rounds one at a time so callers can observe intermediate states
// (per-invocation histograms, stepwise composition tests).
class Amplifier {
  public:
    explicit Amplifier(const GroverRun& run)
        : state_(run.num_qubits, run.prep_subset), marked_(detail::sorted_unique(run.marked)) {
        if (run.invocations < 0) {
            throw std::invalid_argument("GroverRun: invocations must be >= 0");
        }
        const auto& prep = state_.prep_subset();
        for (BasisCode code : marked_) {
            if (!std::binary_search(prep.begin(), prep.end(), code)) {
                throw std::invalid_argument("GroverRun: marked code " + std::to_string(code) +
                                            " is not in the preparation subset");
            }
        }
    }

    // One Grover operator invocation: phase oracle followed by diffusion.
    void step() {
        state_.apply_phase_oracle(marked_);
        state_.apply_diffusion();
        ++rounds_;
    }

    int rounds_applied() const { return rounds_; }
    const AmplitudeState& state() const { return state_; }
    const std::vector<BasisCode>& marked() const { return marked_; }

  private:
    AmplitudeState state_;
    std::vector<BasisCode> marked_;
    int rounds_ = 0;
};

// Exact post-amplification probability for every code in the preparation
// subset. Codes outside it hold zero amplitude under this preparation.
inline std::map<BasisCode, double> run(const GroverRun& job) {
    Amplifier amp(job);
    for (int k = 0; k < job.invocations; ++k) {
        amp.step();
    }
    return amp.state().probabilities(amp.state().prep_subset());
}

// count/shots estimates for the given codes from one measurement of `state`.
// Codes never drawn map to 0.0.
inline std::map<BasisCode, double> sampled_estimates(const AmplitudeState& state,
                                                     const std::vector<BasisCode>& codes,
                                                     std::uint64_t shots, std::uint64_t seed) {
    const auto counts = state.sample(shots, seed);
    std::map<BasisCode, double> out;
    for (BasisCode code : codes) {
        const auto it = counts.find(code);
        const double n = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        out[code] = n / static_cast<double>(shots);
    }
    return out;
}

inline std::map<BasisCode, double> run_sampled(const GroverRun& job, std::uint64_t shots,
                                               std::uint64_t seed) {
    Amplifier amp(job);
    for (int k = 0; k < job.invocations; ++k) {
        amp.step();
    }
    return sampled_estimates(amp.state(), amp.state().prep_subset(), shots, seed);
}

// floor(pi/4 * sqrt(2^num_qubits / num_targets)), never below 1. Computed on
// the full register dimension, not the working-set size: that is how the
// single-shot baseline's invocation budget is defined, and amplification may
// still run over a smaller preparation subset.
inline int optimal_num_invocations(int num_qubits, int num_targets) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("optimal_num_invocations: bad register width");
    }
    const double dim = std::ldexp(1.0, num_qubits);
    if (num_targets < 1 || static_cast<double>(num_targets) > dim) {
        throw std::invalid_argument("optimal_num_invocations: num_targets must be in [1, 2^n]");
    }
    const double raw =
        std::floor(std::numbers::pi / 4.0 * std::sqrt(dim / static_cast<double>(num_targets)));
    return std::max(1, static_cast<int>(raw));
}

} // namespace iqucs::grover
