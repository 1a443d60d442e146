#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "iqucs/random.hpp"

namespace iqucs {

using BasisCode = std::uint64_t;
using Amplitude = std::complex<double>;

// Dense registers above this would not fit a desk-scale simulation.
inline constexpr int kMaxQubits = 24;

namespace detail {

inline std::vector<BasisCode> sorted_unique(std::vector<BasisCode> codes) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

} // namespace detail

// Dense amplitude array over an n-qubit register, together with the basis
// subset its uniform preparation was taken over. The diffusion reflection is
// defined relative to that subset, so amplitude never leaks outside it.
class AmplitudeState {
  public:
    AmplitudeState(int num_qubits, std::vector<BasisCode> prep_subset)
        : num_qubits_(num_qubits), prep_subset_(detail::sorted_unique(std::move(prep_subset))) {
        if (num_qubits_ < 1 || num_qubits_ > kMaxQubits) {
            throw std::invalid_argument("AmplitudeState: num_qubits must be in [1, " +
                                        std::to_string(kMaxQubits) + "], got " +
                                        std::to_string(num_qubits_));
        }
        if (prep_subset_.empty()) {
            throw std::invalid_argument("AmplitudeState: preparation subset is empty");
        }
        const std::size_t dim = std::size_t{1} << num_qubits_;
        if (prep_subset_.back() >= dim) {
            throw std::out_of_range("AmplitudeState: basis code " +
                                    std::to_string(prep_subset_.back()) +
                                    " exceeds register of " + std::to_string(num_qubits_) +
                                    " qubits");
        }
        amplitudes_.assign(dim, Amplitude{0.0, 0.0});
        const double amp = 1.0 / std::sqrt(static_cast<double>(prep_subset_.size()));
        for (BasisCode code : prep_subset_) {
            amplitudes_[code] = Amplitude{amp, 0.0};
        }
    }

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
    const std::vector<BasisCode>& prep_subset() const { return prep_subset_; }

    // Negates the amplitude of every marked basis state, leaves the rest
    // untouched. Involution.
    void apply_phase_oracle(const std::vector<BasisCode>& marked) {
        const auto codes = detail::sorted_unique(marked);
        check_in_range(codes);
        for (BasisCode code : codes) {
            amplitudes_[code] = -amplitudes_[code];
        }
    }

    // Reflection about the prepared state: state <- 2|psi><psi| state - state
    // with |psi> uniform over prep_subset. Basis states outside the subset
    // only change sign, so exact zeros stay zero.
    void apply_diffusion() {
        Amplitude inner{0.0, 0.0};
        for (BasisCode code : prep_subset_) {
            inner += amplitudes_[code];
        }
        const Amplitude lift = 2.0 * inner / static_cast<double>(prep_subset_.size());
        for (Amplitude& a : amplitudes_) {
            a = -a;
        }
        for (BasisCode code : prep_subset_) {
            amplitudes_[code] += lift;
        }
    }

    double probability(BasisCode code) const {
        if (code >= amplitudes_.size()) {
            throw std::out_of_range("probability: basis code " + std::to_string(code) +
                                    " out of range");
        }
        return std::norm(amplitudes_[code]);
    }

    std::map<BasisCode, double> probabilities(const std::vector<BasisCode>& subset) const {
        std::map<BasisCode, double> out;
        for (BasisCode code : subset) {
            out[code] = probability(code);
        }
        return out;
    }

    // Multinomial draw over |amplitude|^2, reproducible for a fixed seed.
    // shots = 0 is rejected here; "use exact probabilities" is a caller-side
    // convention, not a sampling mode.
    std::map<BasisCode, std::uint64_t> sample(std::uint64_t shots, std::uint64_t seed) const {
        if (shots == 0) {
            throw std::invalid_argument("sample: shots must be >= 1");
        }
        std::vector<BasisCode> codes;
        std::vector<double> cdf;
        codes.reserve(prep_subset_.size());
        cdf.reserve(prep_subset_.size());
        double total = 0.0;
        for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
            const double p = std::norm(amplitudes_[i]);
            if (p > 0.0) {
                total += p;
                codes.push_back(static_cast<BasisCode>(i));
                cdf.push_back(total);
            }
        }
        std::map<BasisCode, std::uint64_t> counts;
        std::mt19937_64 eng(seed);
        for (std::uint64_t s = 0; s < shots; ++s) {
            const double u = rng::unit_double(eng()) * total;
            const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            const std::size_t idx = std::min<std::size_t>(it - cdf.begin(), cdf.size() - 1);
            ++counts[codes[idx]];
        }
        return counts;
    }

    double norm_squared() const {
        double total = 0.0;
        for (const Amplitude& a : amplitudes_) {
            total += std::norm(a);
        }
        return total;
    }

  private:
    void check_in_range(const std::vector<BasisCode>& codes) const {
        if (!codes.empty() && codes.back() >= amplitudes_.size()) {
            throw std::out_of_range("basis code " + std::to_string(codes.back()) +
                                    " exceeds register of " + std::to_string(num_qubits_) +
                                    " qubits");
        }
    }

    int num_qubits_;
    std::vector<Amplitude> amplitudes_;
    std::vector<BasisCode> prep_subset_; // sorted, unique, non-empty
};

// Uniform superposition over the given basis subset.
inline AmplitudeState uniform_over(int num_qubits, std::vector<BasisCode> subset) {
    return AmplitudeState(num_qubits, std::move(subset));
}

} // namespace iqucs
