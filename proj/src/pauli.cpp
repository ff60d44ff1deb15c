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

#include "sparsto/pauli.hpp"

#include <algorithm>
#include <array>

#include "sparsto/errors.hpp"

namespace sparsto {

namespace {

int index_of(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
        default: return -1;
    }
}

constexpr std::array<char, 4> kSymbols{'I', 'X', 'Y', 'Z'};

// Single-qubit product table: sigma_a sigma_b = i^phase sigma_result.
struct SiteProduct {
    int phase;
    int result;
};

constexpr SiteProduct site_product(int a, int b) {
    if (a == 0) return {0, b};
    if (b == 0) return {0, a};
    if (a == b) return {0, 0};
    const int c = 6 - a - b;  // the remaining Pauli among X=1, Y=2, Z=3
    // Cyclic order X->Y->Z->X gives +i, anti-cyclic gives -i.
    const bool cyclic = (b - a + 3) % 3 == 1;
    return {cyclic ? 1 : 3, c};
}

const std::array<std::complex<double>, 4> kPowersOfI{
    std::complex<double>(1, 0), std::complex<double>(0, 1), std::complex<double>(-1, 0),
    std::complex<double>(0, -1)};

}  // namespace

PauliString::PauliString(std::string label) : label_(std::move(label)) {
    for (char c : label_) {
        if (index_of(c) < 0) {
            throw FormatError("invalid Pauli character '" + std::string(1, c) + "' in \"" +
                              label_ + "\"");
        }
    }
}

bool PauliString::is_identity() const noexcept {
    return std::all_of(label_.begin(), label_.end(), [](char c) { return c == 'I'; });
}

PhasedPauli multiply(const PauliString& a, const PauliString& b) {
    if (a.size() != b.size()) throw DomainError("Pauli strings of different length");
    std::string out(a.size(), 'I');
    int phase = 0;
    for (std::size_t q = 0; q < a.size(); ++q) {
        const SiteProduct sp = site_product(index_of(a[q]), index_of(b[q]));
        phase += sp.phase;
        out[q] = kSymbols[static_cast<std::size_t>(sp.result)];
    }
    return {phase % 4, PauliString(std::move(out))};
}

bool commutes(const PauliString& a, const PauliString& b) {
    if (a.size() != b.size()) throw DomainError("Pauli strings of different length");
    int anticommuting = 0;
    for (std::size_t q = 0; q < a.size(); ++q) {
        if (a[q] != 'I' && b[q] != 'I' && a[q] != b[q]) ++anticommuting;
    }
    return anticommuting % 2 == 0;
}

ScaledPauli commutator(const ScaledPauli& a, const ScaledPauli& b) {
    if (a.is_zero() || b.is_zero() || commutes(a.string, b.string)) {
        return {0.0, PauliString::identity(a.string.size())};
    }
    const PhasedPauli ab = multiply(a.string, b.string);
    return {2.0 * a.coeff * b.coeff * kPowersOfI[static_cast<std::size_t>(ab.phase)], ab.string};
}

}  // namespace sparsto
