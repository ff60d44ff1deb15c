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

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sparsto/ansatz.hpp"
#include "sparsto/errors.hpp"

namespace sparsto {
namespace {

using testing::make_spec;

HamiltonianSpec four_terms(std::vector<double> h) {
    return make_spec(std::move(h), {"XI", "ZI", "IX", "IZ"});
}

TEST(Ansatz, LinearWorkedExample) {
    const ProbabilityAssignment a = linear_ansatz_probs(four_terms({0.5, 0.3, 0.2, 0.1}), 1, 1.6);
    EXPECT_EQ(a.p(0), 1.0);
    EXPECT_DOUBLE_EQ(a.p(1), 0.3);
    EXPECT_DOUBLE_EQ(a.p(2), 0.2);
    EXPECT_DOUBLE_EQ(a.p(3), 0.1);
    EXPECT_DOUBLE_EQ(a.scale, 1.0);
    EXPECT_EQ(a.active_count, 1u);
    EXPECT_EQ(a.tag, AnsatzTag::linear);
}

TEST(Ansatz, LinearRegularityViolation) {
    try {
        linear_ansatz_probs(four_terms({1.0, 0.9, 0.05, 0.05}), 1, 3.0);
        FAIL() << "expected InfeasibleError";
    } catch (const InfeasibleError& e) {
        EXPECT_EQ(e.index(), 1u);
    }
}

TEST(Ansatz, LinearFullActiveSet) {
    const ProbabilityAssignment a = linear_ansatz_probs(four_terms({0.5, 0.3, 0.2, 0.1}), 4, 2.0);
    EXPECT_TRUE((a.p == 1.0).all());
    EXPECT_EQ(a.active_count, 4u);
}

TEST(Ansatz, LinearPreconditions) {
    const HamiltonianSpec spec = four_terms({0.5, 0.3, 0.2, 0.1});
    EXPECT_THROW(linear_ansatz_probs(spec, 1, 1.0), DomainError);
    EXPECT_THROW(linear_ansatz_probs(spec, 1, 4.5), DomainError);
    EXPECT_THROW(linear_ansatz_probs(spec, 5, 4.0), DomainError);
    EXPECT_THROW(linear_ansatz_probs(four_terms({0.1, 0.3, 0.2, 0.5}), 1, 1.6), DomainError);
}

TEST(Ansatz, UniformExamples) {
    const HamiltonianSpec spec = four_terms({0.5, 0.3, 0.2, 0.1});
    const ProbabilityAssignment a = uniform_ansatz_probs(spec, 1, 0.5);
    EXPECT_EQ(a.p(0), 1.0);
    EXPECT_EQ(a.p(3), 0.5);
    EXPECT_DOUBLE_EQ(a.expected_terms(), 2.5);
    EXPECT_DOUBLE_EQ(a.mu, 2.5);
    EXPECT_TRUE((uniform_ansatz_probs(spec, 2, 1.0).p == 1.0).all());
    const HamiltonianSpec three = make_spec({3, 2, 1}, {"XI", "ZI", "IX"});
    EXPECT_DOUBLE_EQ(uniform_ansatz_probs(three, 0, 1e-3).expected_terms(), 3e-3);
    EXPECT_THROW(uniform_ansatz_probs(spec, 0, 0.0), DomainError);
}

TEST(Ansatz, KktAcceptsLinearAnsatz) {
    const HamiltonianSpec spec = four_terms({0.5, 0.3, 0.2, 0.1});
    const ProbabilityAssignment a = linear_ansatz_probs(spec, 1, 1.6);
    const KktReport r = kkt_verify(spec, a, 1e-10);
    EXPECT_TRUE(r.satisfied);
    EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Ansatz, KktRejectsUniformOnNonUniformMagnitudes) {
    const HamiltonianSpec spec = four_terms({0.5, 0.3, 0.2, 0.1});
    const KktReport r = kkt_verify(spec, uniform_ansatz_probs(spec, 1, 0.2), 1e-9);
    EXPECT_FALSE(r.satisfied);
    EXPECT_FALSE(r.proportional);
    EXPECT_FALSE(r.diagnostics.empty());
}

TEST(Ansatz, KktRejectsPerturbedBudget) {
    const HamiltonianSpec spec = four_terms({0.5, 0.3, 0.2, 0.1});
    ProbabilityAssignment a = linear_ansatz_probs(spec, 1, 1.6);
    a.p(1) += 0.01;
    const KktReport r = kkt_verify(spec, a, 1e-10);
    EXPECT_FALSE(r.satisfied);
    EXPECT_FALSE(r.budget);
}

TEST(Ansatz, StandardGrid) {
    const AnsatzGrid g = AnsatzGrid::standard();
    EXPECT_EQ(g.active_fractions.size(), 11u);
    EXPECT_EQ(g.mu_primes.size(), 13u);
    EXPECT_EQ(g.mu_primes.front(), 1e-5);
    EXPECT_EQ(g.mu_primes.back(), 1.0);
}

TEST(Ansatz, GridDeduplicatesAndCollapsesFullActiveSet) {
    const HamiltonianSpec spec = sort_terms_desc(synth_power_law(5, 1.0, 3, 2));
    const OptimizationReport r = grid_optimize(spec, 1.0, 100.0, AnsatzKind::uniform);
    // round(f * 5) over f = 0, 0.1, ..., 1 gives {0, 1, 2, 3, 4, 5}; |A| = 5 is one point.
    EXPECT_EQ(r.grid.size(), 5u * 13u + 1u);
    std::size_t full = 0;
    for (const auto& rec : r.grid) full += rec.config.active_count == 5 ? 1 : 0;
    EXPECT_EQ(full, 1u);
}

TEST(Ansatz, GridBestIsMinimumOfFeasibleRecords) {
    const HamiltonianSpec spec = sort_terms_desc(synth_power_law(40, 2.0, 4, 3));
    const OptimizationReport r = grid_optimize(spec, 5.0, 1e4, AnsatzKind::linear);
    for (const auto& rec : r.grid) {
        if (!rec.feasible) {
            EXPECT_FALSE(rec.bound.has_value());
            continue;
        }
        EXPECT_GE(rec.bound->total, r.best_bound.total);
    }
    EXPECT_NEAR(r.best_assignment.expected_terms(), r.best_bound.inputs.mu,
                1e-12 * r.best_bound.inputs.mu);
    const BoundBreakdown ones =
        theorem2_bound(spec.magnitudes(), Eigen::ArrayXd::Ones(40), 5.0, 1e4);
    EXPECT_LE(r.best_bound.total, ones.total);
}

TEST(Ansatz, GridIsThreadCountIndependent) {
    const HamiltonianSpec spec = sort_terms_desc(synth_power_law(60, 1.5, 4, 8));
    const OptimizationReport a = grid_optimize(spec, 3.0, 1e5, AnsatzKind::linear, AnsatzGrid::standard(), 1);
    const OptimizationReport b = grid_optimize(spec, 3.0, 1e5, AnsatzKind::linear, AnsatzGrid::standard(), 4);
    EXPECT_EQ(grid_csv(a), grid_csv(b));
    EXPECT_EQ(a.best_config.active_count, b.best_config.active_count);
    EXPECT_EQ(a.best_config.mu_prime, b.best_config.mu_prime);
}

TEST(Ansatz, GridTiesGoToDenserAssignments) {
    // Equal magnitudes and all-ones-equivalent points: mu' = 1 at any |A|
    // gives p = 1, so the tie resolves to |A| = L.
    const HamiltonianSpec spec = make_spec({1, 1, 1}, {"XI", "ZI", "IX"});
    AnsatzGrid grid;
    grid.active_fractions = {0.0, 0.5, 1.0};
    grid.mu_primes = {1.0};
    const OptimizationReport r = grid_optimize(spec, 1.0, 1e12, AnsatzKind::uniform, grid);
    EXPECT_EQ(r.best_config.active_count, 3u);
}

TEST(Ansatz, HugeBudgetSelectsFullActiveSet) {
    const HamiltonianSpec spec = sort_terms_desc(synth_power_law(30, 2.0, 4, 5));
    const OptimizationReport r = grid_optimize(spec, 1.0, 1e9 * 30, AnsatzKind::linear);
    EXPECT_EQ(r.best_config.active_count, 30u);
}

TEST(Ansatz, GridCsvHeader) {
    const HamiltonianSpec spec = make_spec({3, 2, 1}, {"XI", "ZI", "IX"});
    const std::string csv = grid_csv(grid_optimize(spec, 1.0, 100.0, AnsatzKind::linear));
    EXPECT_EQ(csv.substr(0, csv.find('\n')),
              "active_fraction,mu_prime,feasible,eps1,eps2,eps31,eps32,total");
}

TEST(Ansatz, GridRequiresSortedInputAndThreeTerms) {
    EXPECT_THROW(grid_optimize(make_spec({1, 2, 3}, {"XI", "ZI", "IX"}), 1.0, 10.0, AnsatzKind::linear),
                 DomainError);
    EXPECT_THROW(grid_optimize(make_spec({2, 1}, {"XI", "ZI"}), 1.0, 10.0, AnsatzKind::linear),
                 DomainError);
}

TEST(Ansatz, KktHoldsOnEveryFeasibleLinearPoint) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 20; ++trial) {
        const HamiltonianSpec spec = sort_terms_desc(testing::random_spec(rng, 3, 5 + trial, 1e-3, 1.0));
        const OptimizationReport r = grid_optimize(spec, 1.0, 1e3, AnsatzKind::linear);
        for (const auto& rec : r.grid) {
            if (!rec.feasible) continue;
            const double a = static_cast<double>(rec.config.active_count);
            const double mu = a + rec.config.mu_prime * (static_cast<double>(spec.size()) - a);
            const ProbabilityAssignment p = linear_ansatz_probs(spec, rec.config.active_count, mu);
            EXPECT_TRUE(kkt_verify(spec, p, 1e-9).satisfied);
        }
    }
}

TEST(Ansatz, OptimalActiveFractionTrendsUpwardInG) {
    const HamiltonianSpec spec = sort_terms_desc(synth_power_law(200, 2.0, 6, 1));
    const double t = 20.0 / lambda_norm(spec);
    std::vector<double> fractions;
    for (double g = 1e3; g <= 1e13; g *= 10) {
        const OptimizationReport r = grid_optimize(spec, t, g, AnsatzKind::linear);
        fractions.push_back(static_cast<double>(r.best_config.active_count) / 200.0);
    }
    int inversions = 0;
    for (std::size_t i = 1; i < fractions.size(); ++i) inversions += fractions[i] < fractions[i - 1];
    EXPECT_LE(inversions, 1);
}

}  // namespace
}  // namespace sparsto
