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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sparsto/bounds.hpp"
#include "sparsto/hamiltonian.hpp"

namespace sparsto {

enum class AnsatzKind { linear, uniform };

std::string_view to_string(AnsatzKind kind);

struct AnsatzConfig {
    AnsatzKind kind = AnsatzKind::linear;
    std::size_t active_count = 0;
    /// (mu - |A|) / (L - |A|); ignored when active_count == L.
    double mu_prime = 1.0;
};

/// Linear ansatz: p_j = 1 on the first `active_count` terms and p_j = c h_j
/// on the rest, with c = (mu - |A|) / sum_{inactive} h_j.
///
/// `spec_sorted` must be sorted by decreasing magnitude. Throws
/// InfeasibleError (carrying the offending index) when some inactive p_j
/// reaches 1, and DomainError when mu is outside [|A|, L] or equals |A| with
/// inactive terms left.
ProbabilityAssignment linear_ansatz_probs(const HamiltonianSpec& spec_sorted,
                                          std::size_t active_count, double mu);

/// Uniform ansatz: p_j = 1 on the active prefix, mu_prime elsewhere.
ProbabilityAssignment uniform_ansatz_probs(const HamiltonianSpec& spec_sorted,
                                           std::size_t active_count, double mu_prime);

/// Outcome of checking the optimality conditions of the leading-order
/// allocation problem on the inactive set.
struct KktReport {
    bool satisfied = false;
    bool proportional = false;   // p_j / h_j constant on the inactive set
    bool budget = false;         // sum of inactive p_j equals mu - |A|
    bool feasible = false;       // p in (0, 1], active p == 1, inactive p < 1
    bool stationary = false;     // sqrt(u) p_j - sqrt(r) s h_j == 0 on the inactive set
    double proportionality_residual = 0.0;
    double budget_residual = 0.0;
    double stationarity_residual = 0.0;
    std::vector<std::string> diagnostics;
};

/// Verifies the KKT conditions for `assignment` against `spec_sorted` within
/// absolute tolerance `tol`. The stationarity multiplier is evaluated with
/// r s^2 normalised to 1; the conditions are homogeneous in r s^2.
KktReport kkt_verify(const HamiltonianSpec& spec_sorted, const ProbabilityAssignment& assignment,
                     double tol);

/// Search grid over active fractions and mu'.
struct AnsatzGrid {
    std::vector<double> active_fractions;
    std::vector<double> mu_primes;

    /// |A|/L in {0, 0.1, ..., 1} and mu' in {1e-5, 1e-4, 1e-3, 0.1, ..., 1}.
    static AnsatzGrid standard();
};

struct GridRecord {
    AnsatzConfig config;
    double active_fraction = 0.0;
    bool feasible = false;
    std::optional<BoundBreakdown> bound;
};

struct OptimizationReport {
    AnsatzConfig best_config;
    ProbabilityAssignment best_assignment;
    BoundBreakdown best_bound;
    std::vector<GridRecord> grid;
};

/// Evaluates theorem2_bound on every grid point and returns the minimiser.
///
/// Active counts are round(fraction * L), deduplicated; at |A| = L a single
/// point is evaluated. Infeasible linear-ansatz points are recorded without a
/// bound. Ties go to the larger |A|, then the larger mu'. Grid points may be
/// evaluated on `threads` workers (0 = hardware concurrency); the report is
/// identical for every thread count. Throws DomainError when every point is
/// infeasible.
OptimizationReport grid_optimize(const HamiltonianSpec& spec_sorted, double t, double gates,
                                 AnsatzKind kind, const AnsatzGrid& grid = AnsatzGrid::standard(),
                                 unsigned threads = 1);

/// CSV with header active_fraction,mu_prime,feasible,eps1,eps2,eps31,eps32,total.
std::string grid_csv(const OptimizationReport& report);

}  // namespace sparsto
