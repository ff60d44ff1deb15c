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

// Dense reference simulation of small channels.
//
// Density operators are vectorised column-major, so a unitary channel
// rho -> U rho U^dagger acts as conj(U) (x) U and the Liouvillian of H,
// rho -> -i (H rho - rho H), is -i (I (x) H - H^T (x) I).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sparsto/bounds.hpp"
#include "sparsto/hamiltonian.hpp"
#include "sparsto/schedule.hpp"

namespace sparsto {

using DenseOperator = Eigen::MatrixXcd;
using SuperOperator = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxOperatorQubits = 12;
inline constexpr std::size_t kMaxChannelQubits = 6;
inline constexpr std::size_t kMaxEnumeratedTerms = 12;

/// Dense 2^n x 2^n matrix of a Pauli string; qubit 0 (leftmost) is the most
/// significant bit of the basis index.
DenseOperator pauli_to_matrix(const PauliString& pauli);

DenseOperator hamiltonian_matrix(const HamiltonianSpec& spec);

/// exp(-i H t) from the Hermitian eigendecomposition of H.
DenseOperator evolution_unitary(const HamiltonianSpec& spec, double t);

/// exp(-i angle P) = cos(angle) I - i sin(angle) P.
DenseOperator pauli_rotation(const PauliString& pauli, double angle);

SuperOperator unitary_channel(const DenseOperator& unitary);
SuperOperator liouvillian(const DenseOperator& hamiltonian);

/// Liouvillians of the individual terms coeff_j P_j, in term order.
std::vector<SuperOperator> term_liouvillians(const HamiltonianSpec& spec);

SuperOperator ideal_channel(const HamiltonianSpec& spec, double t);

/// Product of all gates of the schedule in execution order.
DenseOperator schedule_unitary(const GateSchedule& schedule);
SuperOperator schedule_channel(const GateSchedule& schedule);

/// E[(T_fwd + T_rev) / 2] for one sparsified step of duration s, summed
/// exactly over all 2^L keep/drop outcomes.
SuperOperator expected_step_exact(const HamiltonianSpec& spec,
                                  const ProbabilityAssignment& assignment, double s);

struct MonteCarloStep {
    SuperOperator mean;
    /// Largest entrywise standard error of the mean.
    double standard_error = 0.0;
    std::size_t samples = 0;
};

/// Sample mean of (T_fwd + T_rev) / 2 over sampled keep/drop outcomes. Sample
/// i uses substream(seed, first_index + i) with the same draw layout as
/// compile_sparsto.
MonteCarloStep expected_step_mc(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment,
                                double s, std::size_t samples, std::uint64_t seed,
                                std::uint64_t first_index = 0);

/// Choi state (1/d) sum_ij |i><j| (x) Phi(|i><j|) of a superoperator.
DenseOperator choi_state(const SuperOperator& channel);

/// Trace norm of the difference of the Choi states; a lower bound on the
/// diamond-norm distance of the channels.
double choi_trace_distance(const SuperOperator& a, const SuperOperator& b);

enum class SimulationMode { exact, monte_carlo };

struct ChannelErrorReport {
    std::string metric = "choi_trace_distance";
    double value = 0.0;
    double bound_total = 0.0;
    /// 0 for exact enumeration.
    std::size_t samples = 0;
    double standard_error = 0.0;
};

/// Error of the expected SparSto channel for (t, G) against exp(tL), next to
/// theorem2_bound for the same inputs. Independent repeats make the expected
/// channel E[step(s_last)] E[step(s)]^floor(G/mu).
ChannelErrorReport empirical_error(const HamiltonianSpec& spec,
                                   const ProbabilityAssignment& assignment, double t, double gates,
                                   SimulationMode mode, std::size_t samples = 0,
                                   std::uint64_t seed = 0);

}  // namespace sparsto
