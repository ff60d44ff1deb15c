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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "sparsto/pauli.hpp"

namespace sparsto {

/// coeff * pauli. Bounds consume |coeff|; gate angles keep the sign.
struct HamTerm {
    double coeff = 0.0;
    PauliString pauli;

    friend bool operator==(const HamTerm&, const HamTerm&) = default;
};

/// Qubit Hamiltonian H = sum_j coeff_j P_j as an ordered term list.
///
/// Construction validates the invariants: every label has n_qubits
/// characters, coefficients are finite and nonzero, no label is the identity,
/// and no label repeats. Violations raise FormatError. Instances are
/// immutable.
class HamiltonianSpec {
public:
    HamiltonianSpec(std::size_t n_qubits, std::vector<HamTerm> terms, std::string provenance = {});

    std::size_t n_qubits() const noexcept { return n_qubits_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::vector<HamTerm>& terms() const noexcept { return terms_; }
    const HamTerm& operator[](std::size_t j) const { return terms_[j]; }
    const std::string& provenance() const noexcept { return provenance_; }

    /// |coeff_j| as a column array, aligned to term order.
    Eigen::ArrayXd magnitudes() const;
    /// coeff_j as a column array, aligned to term order.
    Eigen::ArrayXd coefficients() const;

    friend bool operator==(const HamiltonianSpec&, const HamiltonianSpec&) = default;

private:
    std::size_t n_qubits_;
    std::vector<HamTerm> terms_;
    std::string provenance_;
};

struct ParsedHamiltonian {
    HamiltonianSpec spec;
    std::vector<std::string> warnings;
};

/// Reads a "hamiltonian-terms-v1" document. All-identity terms are dropped
/// with one warning each; everything else that violates the format raises
/// FormatError.
ParsedHamiltonian parse_hamiltonian(std::string_view document);
ParsedHamiltonian read_hamiltonian_file(const std::string& path);

/// Writes a "hamiltonian-terms-v1" document (terms in spec order).
std::string serialize_hamiltonian(const HamiltonianSpec& spec);

/// lambda = sum_j |coeff_j|, accumulated with compensation.
double lambda_norm(const HamiltonianSpec& spec);

/// Terms reordered by decreasing |coeff|; equal magnitudes keep file order.
HamiltonianSpec sort_terms_desc(const HamiltonianSpec& spec);

bool is_sorted_desc(const HamiltonianSpec& spec);

/// Synthetic power-law Hamiltonian: |coeff_j| = j^(-exponent), j = 1..L,
/// random sign, distinct non-identity labels drawn without replacement.
/// Fully determined by the arguments. Throws DomainError if L exceeds
/// 4^n_qubits - 1.
HamiltonianSpec synth_power_law(std::size_t n_terms, double exponent, std::size_t n_qubits,
                                std::uint64_t seed);

}  // namespace sparsto
