#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "iqucs/statevector.hpp"

using iqucs::AmplitudeState;
using iqucs::BasisCode;
using Catch::Matchers::WithinAbs;

namespace {

double max_amplitude_delta(const AmplitudeState& a, const AmplitudeState& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
        worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("preparation is uniform over the subset and zero elsewhere") {
    AmplitudeState state(3, {1, 2, 5});
    const double amp = 1.0 / std::sqrt(3.0);
    for (BasisCode code = 0; code < 8; ++code) {
        const bool in_subset = code == 1 || code == 2 || code == 5;
        REQUIRE_THAT(state.amplitudes()[code].real(), WithinAbs(in_subset ? amp : 0.0, 1e-15));
        REQUIRE_THAT(state.amplitudes()[code].imag(), WithinAbs(0.0, 1e-15));
    }
    REQUIRE_THAT(state.norm_squared(), WithinAbs(1.0, 1e-12));
    REQUIRE(state.dimension() == 8);
    REQUIRE(state.num_qubits() == 3);
}

TEST_CASE("preparation subset is deduplicated and sorted") {
    AmplitudeState state(2, {3, 1, 3, 1});
    REQUIRE(state.prep_subset() == std::vector<BasisCode>{1, 3});
    REQUIRE_THAT(state.probability(1), WithinAbs(0.5, 1e-12));
}

TEST_CASE("construction rejects bad inputs") {
    REQUIRE_THROWS_AS(AmplitudeState(0, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(AmplitudeState(iqucs::kMaxQubits + 1, {0}), std::invalid_argument);
    REQUIRE_THROWS_AS(AmplitudeState(2, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(AmplitudeState(2, {4}), std::out_of_range);
}

TEST_CASE("phase oracle negates exactly the marked amplitudes") {
    AmplitudeState state(3, {0, 1, 2, 3, 4, 5, 6, 7});
    state.apply_phase_oracle({2, 5});
    const double amp = 1.0 / std::sqrt(8.0);
    for (BasisCode code = 0; code < 8; ++code) {
        const double expected = (code == 2 || code == 5) ? -amp : amp;
        REQUIRE_THAT(state.amplitudes()[code].real(), WithinAbs(expected, 1e-15));
    }
}

TEST_CASE("phase oracle is an involution and tolerates duplicate marks") {
    AmplitudeState state(3, {0, 3, 6});
    const AmplitudeState before = state;
    state.apply_phase_oracle({3, 3, 6});
    state.apply_phase_oracle({6, 3});
    REQUIRE(max_amplitude_delta(state, before) < 1e-15);
}

TEST_CASE("phase oracle rejects codes outside the register") {
    AmplitudeState state(2, {0, 1});
    REQUIRE_THROWS_AS(state.apply_phase_oracle({4}), std::out_of_range);
}

TEST_CASE("diffusion fixes the prepared state and is self-inverse") {
    AmplitudeState prepared(4, {0, 3, 7, 9, 12});
    AmplitudeState state = prepared;
    state.apply_diffusion();
    REQUIRE(max_amplitude_delta(state, prepared) < 1e-12);

    state.apply_phase_oracle({3, 9});
    const AmplitudeState kicked = state;
    state.apply_diffusion();
    state.apply_diffusion();
    REQUIRE(max_amplitude_delta(state, kicked) < 1e-12);
}

TEST_CASE("oracle and diffusion preserve the norm over many rounds") {
    AmplitudeState state(5, {1, 4, 9, 16, 25, 30});
    for (int round = 0; round < 100; ++round) {
        state.apply_phase_oracle({4, 25});
        state.apply_diffusion();
        REQUIRE_THAT(state.norm_squared(), WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("amplitude never leaks outside the preparation subset") {
    AmplitudeState state(3, {1, 2, 5});
    for (int round = 0; round < 25; ++round) {
        state.apply_phase_oracle({2});
        state.apply_diffusion();
    }
    for (BasisCode code : {0, 3, 4, 6, 7}) {
        REQUIRE_THAT(state.probability(code), WithinAbs(0.0, 1e-25));
    }
}

TEST_CASE("probability accessors") {
    AmplitudeState state(2, {0, 1});
    REQUIRE_THAT(state.probability(0), WithinAbs(0.5, 1e-12));
    REQUIRE_THAT(state.probability(3), WithinAbs(0.0, 1e-15));
    REQUIRE_THROWS_AS(state.probability(4), std::out_of_range);

    const auto probs = state.probabilities({0, 1, 2});
    REQUIRE(probs.size() == 3);
    REQUIRE_THAT(probs.at(0), WithinAbs(0.5, 1e-12));
    REQUIRE_THAT(probs.at(2), WithinAbs(0.0, 1e-15));
}

TEST_CASE("sampling rejects zero shots") {
    AmplitudeState state(1, {0, 1});
    REQUIRE_THROWS_AS(state.sample(0, 1), std::invalid_argument);
}

TEST_CASE("sampling is reproducible and conserves shots") {
    AmplitudeState state(3, {0, 1, 2, 3, 4});
    state.apply_phase_oracle({2});
    state.apply_diffusion();

    const auto a = state.sample(12000, 42);
    const auto b = state.sample(12000, 42);
    REQUIRE(a == b);

    std::uint64_t total = 0;
    for (const auto& [code, count] : a) {
        total += count;
        REQUIRE(state.probability(code) > 0.0);
    }
    REQUIRE(total == 12000);
}

TEST_CASE("sampled frequencies converge to exact probabilities") {
    AmplitudeState state(3, {0, 1, 2, 3, 4, 5, 6});
    state.apply_phase_oracle({1, 6});
    state.apply_diffusion();

    const std::uint64_t shots = 1'000'000;
    const auto counts = state.sample(shots, 7);
    // five sigmas of the worst-case binomial deviation
    const double bound = 5.0 * std::sqrt(0.25 / static_cast<double>(shots));
    for (BasisCode code = 0; code < 7; ++code) {
        const auto it = counts.find(code);
        const double freq =
            it == counts.end() ? 0.0
                               : static_cast<double>(it->second) / static_cast<double>(shots);
        REQUIRE_THAT(freq, WithinAbs(state.probability(code), bound));
    }
}

TEST_CASE("uniform_over builds the same state as the constructor") {
    const auto built = iqucs::uniform_over(2, {0, 2});
    REQUIRE(max_amplitude_delta(built, AmplitudeState(2, {0, 2})) < 1e-15);
}
