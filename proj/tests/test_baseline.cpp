#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <set>

#include "iqucs/baseline.hpp"
#include "iqucs/metrics.hpp"

using iqucs::BaselineOutcome;
using iqucs::FilterConfig;
using iqucs::TargetSet;
using Catch::Matchers::WithinAbs;

namespace {

FilterConfig exact_config() {
    FilterConfig config;
    config.shots = 0;
    return config;
}

// per-target probability after k rounds over the full 2^nq register
double expected_target_fidelity(int num_qubits, int num_targets, int rounds) {
    const double n = std::ldexp(1.0, num_qubits);
    const double theta = std::asin(std::sqrt(num_targets / n));
    const double s = std::sin((2.0 * rounds + 1.0) * theta);
    return s * s / num_targets;
}

} // namespace

TEST_CASE("ten records, three targets: seven rounds find exactly the targets") {
    const auto records = iqucs::load_wordlist("", 10);
    const TargetSet targets{{1, 4, 7}};
    const BaselineOutcome outcome = iqucs::gsearch(records, targets, exact_config());

    REQUIRE(outcome.invocations == 7);
    REQUIRE(outcome.total_qubits == 8);
    REQUIRE(outcome.predicted == std::set<int>{1, 4, 7});

    const double expected = expected_target_fidelity(8, 3, 7);
    for (const auto& [original_index, fidelity] : outcome.fidelities) {
        if (targets.values.count(original_index)) {
            REQUIRE_THAT(fidelity, WithinAbs(expected, 1e-12));
        } else {
            REQUIRE(fidelity < iqucs::filter_threshold(10, 0.85));
        }
    }
    REQUIRE(iqucs::cqc(iqucs::CqcTrace{{{outcome.total_qubits, outcome.invocations}}}) == 56);
}

TEST_CASE("hundred records, twenty targets: twenty-two rounds find all of them") {
    const auto records = iqucs::load_wordlist("", 100);
    TargetSet targets;
    for (int v = 0; v < 20; ++v) {
        targets.values.insert(5 * v);
    }
    const BaselineOutcome outcome = iqucs::gsearch(records, targets, exact_config());
    REQUIRE(outcome.invocations == 22);
    REQUIRE(outcome.total_qubits == 14);
    std::set<int> truth;
    for (int v : targets.values) {
        truth.insert(v); // value == original index in the rank encoding
    }
    REQUIRE(outcome.predicted == truth);
    REQUIRE_THAT(iqucs::accuracy(outcome.predicted, truth, 100), WithinAbs(1.0, 1e-15));
}

TEST_CASE("hundred records, forty targets: fifteen rounds find all of them") {
    const auto records = iqucs::load_wordlist("", 100);
    TargetSet targets;
    for (int v = 30; v < 70; ++v) {
        targets.values.insert(v);
    }
    const BaselineOutcome outcome = iqucs::gsearch(records, targets, exact_config());
    REQUIRE(outcome.invocations == 15);
    REQUIRE(outcome.total_qubits == 14);
    REQUIRE(outcome.predicted.size() == 40);
    REQUIRE_THAT(iqucs::accuracy(outcome.predicted, targets.values, 100), WithinAbs(1.0, 1e-15));
}

TEST_CASE("a single record is found in one round") {
    const auto records = iqucs::load_wordlist("", 1);
    const BaselineOutcome outcome = iqucs::gsearch(records, TargetSet{{0}}, exact_config());
    REQUIRE(outcome.invocations == 1);
    REQUIRE(outcome.total_qubits == 2);
    REQUIRE(outcome.predicted == std::set<int>{0});
    REQUIRE_THAT(outcome.fidelities.at(0), WithinAbs(1.0, 1e-12));
}

TEST_CASE("round budget always matches the precomputed formula") {
    const auto records = iqucs::load_wordlist("", 37);
    TargetSet targets{{3, 14, 15, 26, 35}};
    const BaselineOutcome outcome = iqucs::gsearch(records, targets, exact_config());
    REQUIRE(outcome.invocations ==
            iqucs::grover::optimal_num_invocations(outcome.total_qubits,
                                                   static_cast<int>(targets.values.size())));
    REQUIRE(outcome.total_qubits == 2 * iqucs::register_width(37));
}

TEST_CASE("observer sees one snapshot per round with the working set") {
    const auto records = iqucs::load_wordlist("", 10);
    const TargetSet targets{{2, 8}};
    FilterConfig config;
    config.shots = 12000;
    config.seed = 4;

    int calls = 0;
    const BaselineOutcome observed = iqucs::gsearch(
        records, targets, config,
        [&](const iqucs::ProblemInstance& instance, int cumulative_invocation,
            const std::map<iqucs::BasisCode, double>& estimates) {
            ++calls;
            REQUIRE(instance.iteration == 1);
            REQUIRE(cumulative_invocation == calls);
            REQUIRE(estimates.size() == instance.pairs.size());
        });
    REQUIRE(calls == observed.invocations);

    const BaselineOutcome plain = iqucs::gsearch(records, targets, config);
    REQUIRE(plain.fidelities == observed.fidelities);
    REQUIRE(plain.predicted == observed.predicted);
}

TEST_CASE("baseline validates like the iterative search") {
    const auto records = iqucs::load_wordlist("", 10);
    REQUIRE_THROWS_AS(iqucs::gsearch(records, TargetSet{}, exact_config()),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(iqucs::gsearch(records, TargetSet{{99}}, exact_config()),
                      std::invalid_argument);
    FilterConfig bad = exact_config();
    bad.threshold_ts = -0.2;
    REQUIRE_THROWS_AS(iqucs::gsearch(records, TargetSet{{1}}, bad), std::invalid_argument);
}
