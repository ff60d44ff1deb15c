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

// Gate-budget sweeps comparing SparSto against its baselines.

#include <cstddef>
#include <string>
#include <vector>

#include "sparsto/hamiltonian.hpp"

namespace sparsto {

struct SweepRow {
    double G = 0.0;
    double eps_sparsto_linear = 0.0;
    double eps_sparsto_uniform = 0.0;
    double eps_r1otrott = 0.0;
    double eps_qdrift = 0.0;
    double eps_trotter1 = 0.0;
    /// Best |A|/L and mu' of the linear ansatz.
    double best_active_fraction = 0.0;
    double best_mu_prime = 0.0;
};

/// `points` values from gates_min to gates_max inclusive, evenly spaced in
/// log10 when `log` is set. Throws DomainError unless the grid is strictly
/// increasing.
std::vector<double> gate_grid(double gates_min, double gates_max, std::size_t points, bool log);

/// One row per G. The spec is sorted by decreasing magnitude internally.
/// eps_r1otrott is theorem2_bound at p = 1 and eps_trotter1 uses
/// G = max(1, floor(G/L)) L. A column whose optimiser finds no feasible point
/// is NaN.
std::vector<SweepRow> run_sweep(const HamiltonianSpec& spec, double t,
                                const std::vector<double>& gates, unsigned threads = 1);

inline constexpr const char* kSweepHeader =
    "G,eps_sparsto_linear,eps_sparsto_uniform,eps_r1otrott,eps_qdrift,eps_trotter1,"
    "best_active_fraction,best_mu_prime";

std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace sparsto
