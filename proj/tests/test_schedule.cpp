// Copyright 2026 The sparsto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <map>
#include <numeric>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sparsto/errors.hpp"
#include "sparsto/schedule.hpp"

namespace sparsto {
namespace {

using testing::make_spec;

ProbabilityAssignment assignment_of(std::vector<double> p, std::size_t active) {
    ProbabilityAssignment a;
    a.p = Eigen::Map<Eigen::ArrayXd>(p.data(), static_cast<Eigen::Index>(p.size()));
    a.active_count = active;
    a.mu = a.expected_terms();
    return a;
}

TEST(Schedule, DurationsIntegerRatio) {
    const std::vector<double> d = step_duration_schedule(1.0, 10.0, 2.0);
    ASSERT_EQ(d.size(), 5u);
    for (double s : d) EXPECT_DOUBLE_EQ(s, 0.2);
}

TEST(Schedule, DurationsWithRemainder) {
    const std::vector<double> d = step_duration_schedule(1.0, 10.0, 3.0);
    ASSERT_EQ(d.size(), 4u);
    EXPECT_DOUBLE_EQ(d[0], 0.3);
    EXPECT_NEAR(d[3], 0.1, 1e-15);
    EXPECT_NEAR(std::accumulate(d.begin(), d.end(), 0.0), 1.0, 1e-12);
}

TEST(Schedule, DurationsSingleStep) {
    const std::vector<double> d = step_duration_schedule(1.0, 2.5, 2.5);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0], 1.0);
    EXPECT_THROW(step_duration_schedule(1.0, 2.0, 2.5), DomainError);
    EXPECT_THROW(step_duration_schedule(1.0, 2.0, 0.0), DomainError);
}

TEST(Schedule, DurationsSumToTimeAndRepeatCountIsCeiling) {
    for (double g : {7.0, 13.3, 100.0, 1234.5}) {
        for (double mu : {0.7, 1.0, 2.9}) {
            const std::vector<double> d = step_duration_schedule(3.0, g, mu);
            EXPECT_NEAR(std::accumulate(d.begin(), d.end(), 0.0), 3.0, 3e-12);
            EXPECT_EQ(d.size(), static_cast<std::size_t>(std::ceil(g / mu)));
        }
    }
}

TEST(Schedule, SparstoAllOnesIsRandomisedTrotter) {
    const HamiltonianSpec spec = make_spec({0.5, -0.3, 0.2}, {"XI", "ZI", "IX"});
    const GateSchedule s = compile_sparsto(spec, all_ones_assignment(3), 1.0, 30.0, 9);
    const GateSchedule trotter = compile_trotter1(spec, 1.0, 10);
    ASSERT_EQ(s.repeats.size(), 10u);
    bool saw_reverse = false;
    for (std::size_t k = 0; k < s.repeats.size(); ++k) {
        const TrotterStep& step = s.repeats[k];
        ASSERT_EQ(step.gates.size(), 3u);
        if (step.direction == Direction::forward) {
            for (std::size_t g = 0; g < 3; ++g) {
                EXPECT_EQ(step.gates[g].pauli, trotter.repeats[k].gates[g].pauli);
                EXPECT_DOUBLE_EQ(step.gates[g].angle, trotter.repeats[k].gates[g].angle);
            }
        } else {
            saw_reverse = true;
            EXPECT_EQ(step.gates.front().pauli.label(), "IX");
            EXPECT_EQ(step.gates.back().pauli.label(), "XI");
        }
    }
    EXPECT_TRUE(saw_reverse);
}

TEST(Schedule, SparstoAnglesAreRescaled) {
    const HamiltonianSpec spec = make_spec({0.5, -0.3, 0.2}, {"XI", "ZI", "IX"});
    const ProbabilityAssignment a = assignment_of({1.0, 0.5, 0.25}, 1);
    const GateSchedule s = compile_sparsto(spec, a, 1.0, 17.5, 4);
    for (const TrotterStep& step : s.repeats) {
        for (const GateOp& g : step.gates) {
            if (g.pauli.label() == "ZI") EXPECT_DOUBLE_EQ(g.angle, step.duration * -0.3 / 0.5);
            if (g.pauli.label() == "IX") EXPECT_DOUBLE_EQ(g.angle, step.duration * 0.2 / 0.25);
        }
        EXPECT_GE(step.gates.size(), 1u);
    }
}

TEST(Schedule, TinyProbabilitiesGiveEmptySteps) {
    const HamiltonianSpec spec = make_spec({0.5, -0.3, 0.2}, {"XI", "ZI", "IX"});
    const ProbabilityAssignment a = assignment_of({1e-9, 1e-9, 1e-9}, 0);
    const GateSchedule s = compile_sparsto(spec, a, 1.0, 3e-7, 1);
    EXPECT_EQ(s.repeats.size(), 100u);
    EXPECT_EQ(s.gate_count(), 0u);
}

TEST(Schedule, SparstoMeanGatesPerRepeat) {
    const HamiltonianSpec spec = synth_power_law(12, 1.0, 3, 2);
    const ProbabilityAssignment a =
        assignment_of({1.0, 0.6, 0.4, 0.3, 0.2, 0.15, 0.1, 0.08, 0.06, 0.05, 0.04, 0.02}, 1);
    const double mu = a.expected_terms();
    const GateSchedule s = compile_sparsto(spec, a, 1.0, mu * 1e4, 123);
    ASSERT_EQ(s.repeats.size(), 10000u);
    const double var = (a.p * (1.0 - a.p)).sum();
    const double mean = static_cast<double>(s.gate_count()) / 1e4;
    EXPECT_LE(std::abs(mean - mu), 3.0 * std::sqrt(var / 1e4));
}

TEST(Schedule, SparstoIsUnbiasedPerTerm) {
    // E[sum of kept angles for term j] = duration * coeff_j.
    const HamiltonianSpec spec = make_spec({0.5, -0.3, 0.2}, {"XI", "ZI", "IX"});
    const ProbabilityAssignment a = assignment_of({1.0, 0.4, 0.1}, 1);
    const GateSchedule s = compile_sparsto(spec, a, 1.0, a.expected_terms() * 20000, 77);
    const double n = static_cast<double>(s.repeats.size());
    const double dur = s.repeats.front().duration;
    std::map<std::string, double> mass;
    for (const TrotterStep& step : s.repeats) {
        for (const GateOp& g : step.gates) mass[g.pauli.label()] += g.angle;
    }
    for (std::size_t j = 0; j < 3; ++j) {
        const double p = a.p(static_cast<Eigen::Index>(j));
        const double per = dur * spec[j].coeff / p;
        const double sigma = std::abs(per) * std::sqrt(p * (1 - p) * n);
        EXPECT_LE(std::abs(mass[spec[j].pauli.label()] - n * dur * spec[j].coeff), 4.0 * sigma + 1e-12);
    }
}

TEST(Schedule, SparstoDeterministicPerSeed) {
    const HamiltonianSpec spec = synth_power_law(8, 1.0, 3, 2);
    const ProbabilityAssignment a = assignment_of({1, 0.5, 0.5, 0.4, 0.3, 0.2, 0.2, 0.1}, 1);
    const std::string x = serialize_schedule(compile_sparsto(spec, a, 2.0, 400.0, 5));
    EXPECT_EQ(x, serialize_schedule(compile_sparsto(spec, a, 2.0, 400.0, 5)));
    EXPECT_NE(x, serialize_schedule(compile_sparsto(spec, a, 2.0, 400.0, 6)));
}

TEST(Schedule, QdriftSingleTerm) {
    const HamiltonianSpec spec = make_spec({-0.7}, {"XY"});
    const GateSchedule s = compile_qdrift(spec, 2.0, 50.0, 1);
    ASSERT_EQ(s.repeats.size(), 1u);
    ASSERT_EQ(s.gate_count(), 50u);
    for (const GateOp& g : s.repeats[0].gates) EXPECT_DOUBLE_EQ(g.angle, -0.7 * 2.0 / 50.0);
}

TEST(Schedule, QdriftFrequenciesAndMass) {
    const HamiltonianSpec spec = make_spec({3.0, -1.0}, {"XI", "ZI"});
    const GateSchedule s = compile_qdrift(spec, 1.0, 1e5, 31);
    double first = 0, mass = 0;
    for (const GateOp& g : s.repeats[0].gates) {
        first += g.pauli.label() == "XI";
        mass += std::abs(g.angle);
    }
    const double sigma = std::sqrt(0.75 * 0.25 / 1e5);
    EXPECT_LE(std::abs(first / 1e5 - 0.75), 3 * sigma);
    EXPECT_NEAR(mass, 4.0, 1e-9);
}

TEST(Schedule, QdriftNeedsIntegerGates) {
    const HamiltonianSpec spec = make_spec({1.0}, {"X"});
    EXPECT_THROW(compile_qdrift(spec, 1.0, 2.5, 0), DomainError);
}

TEST(Schedule, TrotterShape) {
    const HamiltonianSpec spec = make_spec({0.5, -0.3, 0.2}, {"XI", "ZI", "IX"});
    const GateSchedule one = compile_trotter1(spec, 1.0, 1);
    ASSERT_EQ(one.repeats.size(), 1u);
    EXPECT_EQ(one.gate_count(), 3u);
    const GateSchedule four = compile_trotter1(spec, 1.0, 4);
    EXPECT_DOUBLE_EQ(four.repeats[2].gates[1].angle, one.repeats[0].gates[1].angle / 4);
    EXPECT_EQ(four.expected_gates, 12.0);
    EXPECT_THROW(compile_trotter1(spec, 1.0, 0), DomainError);
}

TEST(Schedule, RoundTrip) {
    const HamiltonianSpec spec = synth_power_law(6, 1.0, 3, 2);
    const ProbabilityAssignment a = assignment_of({1, 0.5, 0.5, 0.4, 0.3, 0.2}, 1);
    const GateSchedule s = compile_sparsto(spec, a, 0.37, 41.0, 12);
    const std::string text = serialize_schedule(s);
    const GateSchedule back = parse_schedule(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(serialize_schedule(back), text);
}

TEST(Schedule, ParseRejectsMalformed) {
    EXPECT_THROW(parse_schedule(""), FormatError);
    EXPECT_THROW(parse_schedule("{\"format\":\"other\"}\n"), FormatError);
    EXPECT_THROW(parse_schedule("{\"format\":\"gate-schedule-v1\",\"n_qubits\":1,\"method\":\"x\",\"seed\":0,"
                                "\"t\":1,\"expected_gates\":1}\n{\"repeat\":0}\n"),
                 FormatError);
}

}  // namespace
}  // namespace sparsto
