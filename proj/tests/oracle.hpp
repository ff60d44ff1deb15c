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

// Independent reference implementations used only by the tests. Everything
// here is written as literal loops over indices so it shares no code path
// with the library formulas it checks.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "sparsto/channel.hpp"
#include "sparsto/hamiltonian.hpp"

namespace sparsto::testing {

struct DirectBound {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double eps31 = 0.0;
    double eps32 = 0.0;
    double total = 0.0;
};

/// Theorem 2 evaluated by explicit loops over distinct index tuples and a
/// direct product for the tail.
inline DirectBound theorem2_direct(const std::vector<double>& h, const std::vector<double>& p,
                                   double t, double g) {
    const std::size_t n = h.size();
    long double mu = 0, lambda = 0, su = 0, sv = 0, swh = 0, shhh = 0, sq = 0, prod = 1;
    for (std::size_t j = 0; j < n; ++j) {
        mu += p[j];
        lambda += h[j];
        su += (1.0L / p[j] - 1.0L) * h[j] * h[j];
        sv += (1.0L / (p[j] * p[j]) - 1.0L) * h[j] * h[j] * h[j];
        sq += h[j] / p[j];
        prod *= p[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            swh += (3.0L / p[j] - 1.0L) * h[j] * h[j] * h[k];
            for (std::size_t l = 0; l < n; ++l) {
                if (l == j || l == k) continue;
                shhh += static_cast<long double>(h[j]) * h[k] * h[l];
            }
        }
    }
    DirectBound b;
    b.eps1 = static_cast<double>(2.0L * t * t * mu / g * su);
    b.eps2 = static_cast<double>(4.0L * t * t * t * mu * mu / (3.0L * g * g) * (sv + swh) +
                                 16.0L * t * t * t * mu * mu / (9.0L * g * g) * shhh);
    const long double pre = 2.0L * std::pow(static_cast<long double>(t), 4) * mu * mu * mu /
                            (3.0L * g * g * g);
    b.eps31 = static_cast<double>(pre * std::pow(lambda, 4));
    b.eps32 = static_cast<double>(pre * prod * std::pow(sq, 4));
    b.total = b.eps1 + b.eps2 + b.eps31 + b.eps32;
    return b;
}

inline double spectral_norm(const Eigen::MatrixXcd& m) {
    return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

/// Sum over j<k<l of the nested commutator norms times h_j h_k h_l, with
/// every commutator formed from dense matrices.
inline double nested_commutator_sum_dense(const HamiltonianSpec& spec) {
    std::vector<Eigen::MatrixXcd> m;
    for (const HamTerm& term : spec.terms()) m.push_back(pauli_to_matrix(term.pauli));
    auto comm = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) -> Eigen::MatrixXcd {
        return a * b - b * a;
    };
    const Eigen::ArrayXd h = spec.magnitudes();
    double total = 0.0;
    const std::size_t n = spec.size();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            for (std::size_t l = k + 1; l < n; ++l) {
                const double a = spectral_norm(comm(m[l], comm(m[j], m[k])));
                const double b = spectral_norm(comm(comm(m[k], m[l]), m[j]));
                total += (a + b) * h(j) * h(k) * h(l);
            }
        }
    }
    return total;
}

inline std::string random_label(std::mt19937_64& rng, std::size_t n_qubits) {
    static constexpr char kAlphabet[] = {'I', 'X', 'Y', 'Z'};
    std::uniform_int_distribution<int> pick(0, 3);
    std::string label;
    do {
        label.clear();
        for (std::size_t q = 0; q < n_qubits; ++q) label.push_back(kAlphabet[pick(rng)]);
    } while (label.find_first_not_of('I') == std::string::npos);
    return label;
}

/// Random spec with distinct labels and coefficients of random sign whose
/// magnitudes lie in [lo, hi].
inline HamiltonianSpec random_spec(std::mt19937_64& rng, std::size_t n_qubits, std::size_t n_terms,
                                   double lo = 0.05, double hi = 1.0) {
    std::uniform_real_distribution<double> mag(lo, hi);
    std::bernoulli_distribution sign(0.5);
    std::vector<HamTerm> terms;
    std::vector<std::string> used;
    while (terms.size() < n_terms) {
        std::string label = random_label(rng, n_qubits);
        bool seen = false;
        for (const auto& u : used) seen = seen || u == label;
        if (seen) continue;
        used.push_back(label);
        const double c = mag(rng);
        terms.push_back({sign(rng) ? -c : c, PauliString(label)});
    }
    return HamiltonianSpec(n_qubits, std::move(terms), "test");
}

inline HamiltonianSpec make_spec(std::vector<double> coeffs, std::vector<std::string> labels) {
    std::vector<HamTerm> terms;
    for (std::size_t j = 0; j < coeffs.size(); ++j) terms.push_back({coeffs[j], PauliString(labels[j])});
    return HamiltonianSpec(labels.front().size(), std::move(terms), "test");
}

inline double relative_error(double value, double reference) {
    if (reference == 0.0) return std::abs(value);
    return std::abs(value - reference) / std::abs(reference);
}

/// Central-difference first and second derivatives at 0 with two levels of
/// Richardson extrapolation over the steps {1e-2, 5e-3, 2.5e-3}.
struct Derivatives {
    Eigen::MatrixXcd first;
    Eigen::MatrixXcd second;
};

inline Derivatives derivatives_at_zero(const std::function<Eigen::MatrixXcd(double)>& f) {
    const double steps[3] = {1e-2, 5e-3, 2.5e-3};
    const Eigen::MatrixXcd f0 = f(0.0);
    Eigen::MatrixXcd d1[3], d2[3];
    for (int i = 0; i < 3; ++i) {
        const double h = steps[i];
        const Eigen::MatrixXcd plus = f(h);
        const Eigen::MatrixXcd minus = f(-h);
        d1[i] = (plus - minus) / (2.0 * h);
        d2[i] = (plus - 2.0 * f0 + minus) / (h * h);
    }
    auto extrapolate = [](const Eigen::MatrixXcd* d) -> Eigen::MatrixXcd {
        const Eigen::MatrixXcd r1 = (4.0 * d[1] - d[0]) / 3.0;
        const Eigen::MatrixXcd r2 = (4.0 * d[2] - d[1]) / 3.0;
        return (16.0 * r2 - r1) / 15.0;
    };
    return {extrapolate(d1), extrapolate(d2)};
}

/// Largest entrywise deviation relative to the largest reference entry.
inline double relative_max_error(const Eigen::MatrixXcd& value, const Eigen::MatrixXcd& reference) {
    return (value - reference).cwiseAbs().maxCoeff() / reference.cwiseAbs().maxCoeff();
}

}  // namespace sparsto::testing
