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
#include <limits>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "sparsto/hamiltonian.hpp"

namespace sparsto {

enum class AnsatzTag { linear, uniform, all_one, custom };

/// Per-term keep probabilities for stochastic sparsification, aligned to the
/// term order of the Hamiltonian they were built for.
///
/// Term j survives a step with probability p(j) and is then rescaled by
/// 1/p(j). The first `active_count` terms in descending-magnitude order have
/// p = 1 exactly.
struct ProbabilityAssignment {
    Eigen::ArrayXd p;
    std::size_t active_count = 0;
    AnsatzTag tag = AnsatzTag::custom;
    /// Budget the assignment was constructed for (the nominal mu).
    double mu = 0.0;
    /// Proportionality constant c of the linear ansatz; NaN otherwise.
    double scale = std::numeric_limits<double>::quiet_NaN();

    /// Expected number of gates per step, sum_j p_j.
    double expected_terms() const;
};

ProbabilityAssignment all_ones_assignment(std::size_t n_terms);

/// Checks 0 < p_j <= 1, the length against the spec, and that the
/// `active_count` largest-magnitude terms have p_j == 1. Throws DomainError.
void validate_assignment(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment);

enum class BoundMethod { theorem2, theorem1, corollary_p1, qdrift, trotter1, theorem2_commutator };

std::string_view to_string(BoundMethod method);

struct BoundInputs {
    double t = 0.0;
    double gates = 0.0;
    std::size_t n_terms = 0;
    double lambda = 0.0;
    double mu = 0.0;
};

/// Error bound split into its second-order, third-order and tail parts.
/// Methods without a given component leave it at zero.
struct BoundBreakdown {
    BoundMethod method = BoundMethod::theorem2;
    double eps1 = 0.0;
    double eps2 = 0.0;
    double eps31 = 0.0;
    double eps32 = 0.0;
    double total = 0.0;
    BoundInputs inputs;
};

/// u_j = (1/p_j - 1) h_j^2, v_j = (1/p_j^2 - 1) h_j^3,
/// w_j = (3/p_j - 1) h_j^2, q_j = h_j / p_j.
struct DerivedVectors {
    Eigen::ArrayXd u;
    Eigen::ArrayXd v;
    Eigen::ArrayXd w;
    Eigen::ArrayXd q;
};

DerivedVectors derive_vectors(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p);

/// (p_1 ... p_L) * S(q)^4, evaluated as exp(sum ln p_j + 4 ln S(q)). Returns
/// exactly 0 when the exponent is below the log of the smallest normal double.
double tail_product_factor(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p);

// All bound functions take magnitudes h (nonnegative) and probabilities p of
// equal length, evolution time t > 0 and expected gate count G > 0.

/// Complete bound with distinct-index sums and explicit fourth-order tails.
/// Requires L >= 3.
BoundBreakdown theorem2_bound(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p, double t,
                              double gates);
BoundBreakdown theorem2_bound(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment,
                              double t, double gates);

/// Simplified bound using 1-norms in place of distinct sums; carries the same
/// explicit tails as theorem2_bound.
BoundBreakdown theorem1_bound(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p, double t,
                              double gates);
BoundBreakdown theorem1_bound(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment,
                              double t, double gates);

/// Randomized first-order Trotter (all p_j = 1):
/// eps2 = (8 t^3 L^2 / 3 G^2)(lambda sum h_j^2 + 2 lambda^3 / 3), plus the
/// p = 1 tails.
BoundBreakdown corollary_p1_bound(const Eigen::ArrayXd& h, double t, double gates);
BoundBreakdown corollary_p1_bound(const HamiltonianSpec& spec, double t, double gates);

/// qDRIFT: 4 lambda^2 t^2 / G.
BoundBreakdown qdrift_bound(const HamiltonianSpec& spec, double t, double gates);

/// Deterministic first-order Trotter: L lambda^2 t^2 / (2 G), G = r L.
BoundBreakdown trotter1_bound(const HamiltonianSpec& spec, double t, double gates);

/// Largest term count accepted by commutator_refined_bound.
inline constexpr std::size_t kCommutatorTermLimit = 64;

/// Sum over j < k < l of (||[P_l,[P_j,P_k]]|| + ||[[P_k,P_l],P_j]||) h_j h_k h_l,
/// with the nested commutators evaluated symbolically.
double nested_commutator_sum(const HamiltonianSpec& spec);

/// theorem2_bound with the S(h,h,h) contribution to eps2 replaced by
/// (8 t^3 mu^2 / 9 G^2) * nested_commutator_sum(spec). Requires
/// L <= kCommutatorTermLimit.
BoundBreakdown commutator_refined_bound(const HamiltonianSpec& spec,
                                        const ProbabilityAssignment& assignment, double t,
                                        double gates);

/// Order of the Hamiltonian terms a probability file is aligned to.
enum class TermOrder { file, sorted_desc };

struct ProbabilityFile {
    TermOrder order = TermOrder::file;
    ProbabilityAssignment assignment;
};

/// "probabilities-v1" documents. Parsing checks the format and that every p
/// is finite; alignment with a Hamiltonian is checked by
/// validate_assignment.
ProbabilityFile parse_probabilities(std::string_view document);
ProbabilityFile read_probabilities_file(const std::string& path);
std::string serialize_probabilities(const ProbabilityFile& file);

}  // namespace sparsto
