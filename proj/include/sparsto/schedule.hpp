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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sparsto/bounds.hpp"
#include "sparsto/hamiltonian.hpp"

namespace sparsto {

/// exp(-i * angle * pauli).
struct GateOp {
    PauliString pauli;
    double angle = 0.0;

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

enum class Direction { forward, reverse };

/// One repeat of a schedule. Gates are listed in execution order.
struct TrotterStep {
    std::size_t repeat_index = 0;
    double duration = 0.0;
    Direction direction = Direction::forward;
    std::vector<GateOp> gates;

    friend bool operator==(const TrotterStep&, const TrotterStep&) = default;
};

struct GateSchedule {
    std::size_t n_qubits = 0;
    std::string method;
    std::uint64_t seed = 0;
    double t = 0.0;
    double expected_gates = 0.0;
    std::vector<TrotterStep> repeats;

    std::size_t gate_count() const;

    friend bool operator==(const GateSchedule&, const GateSchedule&) = default;
};

/// floor(G/mu) durations of mu t / G, followed by t - floor(G/mu) mu t / G
/// when G/mu is not an integer. Throws DomainError unless 0 < mu <= G.
std::vector<double> step_duration_schedule(double t, double gates, double mu);

/// Stochastically sparsified randomized first-order Trotter.
///
/// Repeat k draws from substream(seed, k): first the direction (one coin),
/// then one uniform per term in ascending index order; term j is kept when
/// p_j == 1 or the uniform is below p_j. Kept terms become
/// GateOp(pauli_j, duration * coeff_j / p_j), listed ascending for forward
/// steps and descending for reverse steps.
GateSchedule compile_sparsto(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment,
                             double t, double gates, std::uint64_t seed);

/// qDRIFT: G gates, each sampling term j with probability |coeff_j| / lambda
/// and rotating by sign(coeff_j) lambda t / G. G must be a positive integer.
GateSchedule compile_qdrift(const HamiltonianSpec& spec, double t, double gates, std::uint64_t seed);

/// r forward steps of duration t/r with every term at angle (t/r) coeff_j.
GateSchedule compile_trotter1(const HamiltonianSpec& spec, double t, std::size_t r);

/// "gate-schedule-v1" line-delimited JSON.
std::string serialize_schedule(const GateSchedule& schedule);
GateSchedule parse_schedule(std::string_view document);

}  // namespace sparsto
