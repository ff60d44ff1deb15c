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

#include "sparsto/channel.hpp"

#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sparsto/errors.hpp"
#include "sparsto/random.hpp"

namespace sparsto {

namespace {

using cplx = std::complex<double>;
using Index = Eigen::Index;

// P|c> = phase(c) |c ^ flip>.
struct PauliAction {
    Index flip = 0;
    std::vector<cplx> phase;
};

PauliAction pauli_action(const PauliString& pauli) {
    const std::size_t n = pauli.size();
    if (n > kMaxOperatorQubits) {
        throw SizeGuardError("dense operators are limited to " + std::to_string(kMaxOperatorQubits) +
                             " qubits");
    }
    const Index dim = Index{1} << n;
    PauliAction action;
    action.phase.assign(static_cast<std::size_t>(dim), cplx(1.0, 0.0));
    for (std::size_t q = 0; q < n; ++q) {
        const Index bit = Index{1} << (n - 1 - q);
        const char c = pauli[q];
        if (c == 'X' || c == 'Y') action.flip |= bit;
        if (c == 'I' || c == 'X') continue;
        for (Index col = 0; col < dim; ++col) {
            const bool one = (col & bit) != 0;
            // Y|0> = i|1>, Y|1> = -i|0>, Z|b> = (-1)^b |b>.
            const cplx factor = c == 'Y' ? (one ? cplx(0.0, -1.0) : cplx(0.0, 1.0))
                                         : (one ? cplx(-1.0, 0.0) : cplx(1.0, 0.0));
            action.phase[static_cast<std::size_t>(col)] *= factor;
        }
    }
    return action;
}

// U <- exp(-i angle P) U.
void apply_rotation(const PauliAction& action, double angle, DenseOperator& u) {
    const double c = std::cos(angle);
    const cplx ms(0.0, -std::sin(angle));
    const DenseOperator prev = u;
    for (Index r = 0; r < u.rows(); ++r) {
        const Index src = r ^ action.flip;
        u.row(r) = c * prev.row(r) + (ms * action.phase[static_cast<std::size_t>(src)]) * prev.row(src);
    }
}

void require_channel_size(std::size_t n_qubits) {
    if (n_qubits > kMaxChannelQubits) {
        throw SizeGuardError("channel simulation is limited to " +
                             std::to_string(kMaxChannelQubits) + " qubits");
    }
}

SuperOperator kron(const DenseOperator& a, const DenseOperator& b) {
    SuperOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i) {
        for (Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// (T_fwd + T_rev) / 2 for one keep/drop outcome.
SuperOperator symmetric_step(const std::vector<PauliAction>& actions, const Eigen::ArrayXd& angles,
                             const std::vector<bool>& keep, Index dim) {
    DenseOperator fwd = DenseOperator::Identity(dim, dim);
    DenseOperator rev = DenseOperator::Identity(dim, dim);
    const std::size_t n = actions.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (keep[j]) apply_rotation(actions[j], angles(static_cast<Index>(j)), fwd);
        const std::size_t k = n - 1 - j;
        if (keep[k]) apply_rotation(actions[k], angles(static_cast<Index>(k)), rev);
    }
    return 0.5 * (unitary_channel(fwd) + unitary_channel(rev));
}

struct StepSetup {
    std::vector<PauliAction> actions;
    Eigen::ArrayXd angles;
    Index dim = 0;
};

StepSetup step_setup(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment, double s) {
    validate_assignment(spec, assignment);
    require_channel_size(spec.n_qubits());
    StepSetup setup;
    setup.dim = Index{1} << spec.n_qubits();
    setup.angles = s * spec.coefficients() / assignment.p;
    setup.actions.reserve(spec.size());
    for (const HamTerm& term : spec.terms()) setup.actions.push_back(pauli_action(term.pauli));
    return setup;
}

SuperOperator matrix_power(SuperOperator base, std::size_t exponent) {
    SuperOperator result = SuperOperator::Identity(base.rows(), base.cols());
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

}  // namespace

DenseOperator pauli_to_matrix(const PauliString& pauli) {
    const PauliAction action = pauli_action(pauli);
    const Index dim = Index{1} << pauli.size();
    DenseOperator m = DenseOperator::Zero(dim, dim);
    for (Index col = 0; col < dim; ++col) {
        m(col ^ action.flip, col) = action.phase[static_cast<std::size_t>(col)];
    }
    return m;
}

DenseOperator hamiltonian_matrix(const HamiltonianSpec& spec) {
    const Index dim = Index{1} << spec.n_qubits();
    if (spec.n_qubits() > kMaxOperatorQubits) pauli_action(spec[0].pauli);
    DenseOperator h = DenseOperator::Zero(dim, dim);
    for (const HamTerm& term : spec.terms()) h += term.coeff * pauli_to_matrix(term.pauli);
    return h;
}

DenseOperator evolution_unitary(const HamiltonianSpec& spec, double t) {
    const DenseOperator h = hamiltonian_matrix(spec);
    const Eigen::SelfAdjointEigenSolver<DenseOperator> eig(h);
    if (eig.info() != Eigen::Success) throw DomainError("Hamiltonian diagonalisation failed");
    const Eigen::VectorXcd phases =
        (eig.eigenvalues().cast<cplx>() * cplx(0.0, -t)).array().exp().matrix();
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

DenseOperator pauli_rotation(const PauliString& pauli, double angle) {
    const Index dim = Index{1} << pauli.size();
    DenseOperator u = DenseOperator::Identity(dim, dim);
    apply_rotation(pauli_action(pauli), angle, u);
    return u;
}

SuperOperator unitary_channel(const DenseOperator& unitary) { return kron(unitary.conjugate(), unitary); }

SuperOperator liouvillian(const DenseOperator& hamiltonian) {
    const DenseOperator id = DenseOperator::Identity(hamiltonian.rows(), hamiltonian.cols());
    return cplx(0.0, -1.0) * (kron(id, hamiltonian) - kron(hamiltonian.transpose(), id));
}

std::vector<SuperOperator> term_liouvillians(const HamiltonianSpec& spec) {
    require_channel_size(spec.n_qubits());
    std::vector<SuperOperator> out;
    out.reserve(spec.size());
    for (const HamTerm& term : spec.terms()) {
        out.push_back(liouvillian(term.coeff * pauli_to_matrix(term.pauli)));
    }
    return out;
}

SuperOperator ideal_channel(const HamiltonianSpec& spec, double t) {
    require_channel_size(spec.n_qubits());
    return unitary_channel(evolution_unitary(spec, t));
}

DenseOperator schedule_unitary(const GateSchedule& schedule) {
    const Index dim = Index{1} << schedule.n_qubits;
    if (schedule.n_qubits > kMaxOperatorQubits) pauli_action(PauliString::identity(schedule.n_qubits));
    DenseOperator u = DenseOperator::Identity(dim, dim);
    for (const TrotterStep& step : schedule.repeats) {
        for (const GateOp& gate : step.gates) {
            if (gate.pauli.size() != schedule.n_qubits) {
                throw FormatError("gate label length does not match the schedule qubit count");
            }
            apply_rotation(pauli_action(gate.pauli), gate.angle, u);
        }
    }
    return u;
}

SuperOperator schedule_channel(const GateSchedule& schedule) {
    require_channel_size(schedule.n_qubits);
    return unitary_channel(schedule_unitary(schedule));
}

SuperOperator expected_step_exact(const HamiltonianSpec& spec,
                                  const ProbabilityAssignment& assignment, double s) {
    if (spec.size() > kMaxEnumeratedTerms) {
        throw SizeGuardError("exact enumeration is limited to " +
                             std::to_string(kMaxEnumeratedTerms) + " terms");
    }
    const StepSetup setup = step_setup(spec, assignment, s);
    const std::size_t n = spec.size();
    const Index d2 = setup.dim * setup.dim;
    SuperOperator total = SuperOperator::Zero(d2, d2);
    std::vector<bool> keep(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        double weight = 1.0;
        for (std::size_t j = 0; j < n; ++j) {
            keep[j] = ((mask >> j) & 1U) != 0;
            const double pj = assignment.p(static_cast<Index>(j));
            weight *= keep[j] ? pj : 1.0 - pj;
        }
        if (weight == 0.0) continue;
        total += weight * symmetric_step(setup.actions, setup.angles, keep, setup.dim);
    }
    return total;
}

MonteCarloStep expected_step_mc(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment,
                                double s, std::size_t samples, std::uint64_t seed,
                                std::uint64_t first_index) {
    if (samples < 2) throw DomainError("Monte Carlo estimation needs at least 2 samples");
    const StepSetup setup = step_setup(spec, assignment, s);
    const std::size_t n = spec.size();
    const Index d2 = setup.dim * setup.dim;
    SuperOperator mean = SuperOperator::Zero(d2, d2);
    Eigen::MatrixXd m2 = Eigen::MatrixXd::Zero(d2, d2);
    std::vector<bool> keep(n);
    for (std::size_t i = 0; i < samples; ++i) {
        RandomStream rng = substream(seed, first_index + i);
        rng.coin();
        for (std::size_t j = 0; j < n; ++j) {
            const double pj = assignment.p(static_cast<Index>(j));
            const double draw = rng.uniform01();
            keep[j] = pj >= 1.0 || draw < pj;
        }
        const SuperOperator x = symmetric_step(setup.actions, setup.angles, keep, setup.dim);
        const SuperOperator delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += (delta.array() * (x - mean).array().conjugate()).real().matrix();
    }
    MonteCarloStep out;
    const double nn = static_cast<double>(samples);
    out.standard_error = std::sqrt(m2.maxCoeff() / (nn - 1.0) / nn);
    out.mean = std::move(mean);
    out.samples = samples;
    return out;
}

DenseOperator choi_state(const SuperOperator& channel) {
    const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(channel.rows()))));
    if (channel.rows() != d * d || channel.cols() != d * d) {
        throw DomainError("superoperator dimension is not a square of the Hilbert dimension");
    }
    DenseOperator choi(d * d, d * d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            for (Index a = 0; a < d; ++a) {
                for (Index b = 0; b < d; ++b) {
                    choi(i * d + a, j * d + b) = channel(a + b * d, i + j * d) / static_cast<double>(d);
                }
            }
        }
    }
    return choi;
}

double choi_trace_distance(const SuperOperator& a, const SuperOperator& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError("superoperator dimensions differ");
    }
    const DenseOperator diff = choi_state(a) - choi_state(b);
    const Eigen::BDCSVD<DenseOperator> svd(diff);
    return svd.singularValues().sum();
}

ChannelErrorReport empirical_error(const HamiltonianSpec& spec,
                                   const ProbabilityAssignment& assignment, double t, double gates,
                                   SimulationMode mode, std::size_t samples, std::uint64_t seed) {
    validate_assignment(spec, assignment);
    require_channel_size(spec.n_qubits());
    const std::vector<double> durations =
        step_duration_schedule(t, gates, assignment.expected_terms());
    const auto full = static_cast<std::size_t>(std::floor(gates / assignment.expected_terms()));

    ChannelErrorReport report;
    report.bound_total = theorem2_bound(spec, assignment, t, gates).total;

    auto step_channel = [&](double s, std::uint64_t first_index) {
        if (mode == SimulationMode::exact) return expected_step_exact(spec, assignment, s);
        MonteCarloStep mc = expected_step_mc(spec, assignment, s, samples, seed, first_index);
        report.standard_error = std::max(report.standard_error, mc.standard_error);
        return std::move(mc.mean);
    };

    SuperOperator total = matrix_power(step_channel(durations.front(), 0), full);
    if (full < durations.size()) total = step_channel(durations.back(), samples) * total;
    if (mode == SimulationMode::monte_carlo) report.samples = samples;
    report.value = choi_trace_distance(total, ideal_channel(spec, t));
    return report;
}

}  // namespace sparsto
