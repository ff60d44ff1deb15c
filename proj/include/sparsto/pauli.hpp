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

#include <complex>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace sparsto {

/// Tensor product of single-qubit Paulis, written over the alphabet {I,X,Y,Z}.
/// The leftmost character acts on the most significant qubit.
class PauliString {
public:
    PauliString() = default;

    /// Throws FormatError on characters outside {I,X,Y,Z}.
    explicit PauliString(std::string label);

    static PauliString identity(std::size_t n_qubits) {
        return PauliString(std::string(n_qubits, 'I'));
    }

    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return label_.size(); }
    char operator[](std::size_t q) const { return label_[q]; }
    bool is_identity() const noexcept;

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend auto operator<=>(const PauliString&, const PauliString&) = default;

private:
    std::string label_;
};

/// i^phase * string, phase in {0,1,2,3}.
struct PhasedPauli {
    int phase = 0;
    PauliString string;
};

/// coeff * string. A zero coeff stands for the zero operator.
struct ScaledPauli {
    std::complex<double> coeff{1.0, 0.0};
    PauliString string;

    bool is_zero() const noexcept { return coeff == std::complex<double>(0.0, 0.0); }
    /// Spectral norm; Pauli strings are unitary so this is |coeff|.
    double operator_norm() const { return std::abs(coeff); }
};

/// Product a*b. Throws DomainError on length mismatch.
PhasedPauli multiply(const PauliString& a, const PauliString& b);

/// True iff a and b commute (an even number of anticommuting sites).
bool commutes(const PauliString& a, const PauliString& b);

/// [a, b] = ab - ba, which is 0 or 2ab.
ScaledPauli commutator(const ScaledPauli& a, const ScaledPauli& b);

inline ScaledPauli commutator(const PauliString& a, const PauliString& b) {
    return commutator(ScaledPauli{1.0, a}, ScaledPauli{1.0, b});
}

}  // namespace sparsto
