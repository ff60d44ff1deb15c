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

#include "sparsto/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "sparsto/errors.hpp"
#include "sparsto/moments.hpp"

namespace sparsto {

namespace {

constexpr const char* kProbabilityTag = "probabilities-v1";

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(name) + " must be positive and finite");
    }
}

void require_probabilities(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p) {
    if (h.size() != p.size()) {
        throw DomainError("probability vector has " + std::to_string(p.size()) +
                          " entries for " + std::to_string(h.size()) + " terms");
    }
    for (Eigen::Index j = 0; j < p.size(); ++j) {
        if (!(p(j) > 0.0 && p(j) <= 1.0)) {
            throw DomainError("p[" + std::to_string(j) + "] = " + std::to_string(p(j)) +
                              " outside (0, 1]");
        }
    }
}

void require_three_terms(Eigen::Index n) {
    if (n < 3) throw DomainError("bound requires at least 3 terms, got " + std::to_string(n));
}

struct Tails {
    double eps31;
    double eps32;
};

Tails tail_terms(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p, double lambda, double mu,
                 double t, double gates) {
    const double prefactor = 2.0 * std::pow(t, 4) * std::pow(mu, 3) / (3.0 * std::pow(gates, 3));
    return {prefactor * std::pow(lambda, 4), prefactor * tail_product_factor(h, p)};
}

BoundBreakdown finish(BoundBreakdown b) {
    b.total = b.eps1 + b.eps2 + b.eps31 + b.eps32;
    return b;
}

}  // namespace

double ProbabilityAssignment::expected_terms() const { return distinct::sum(p); }

ProbabilityAssignment all_ones_assignment(std::size_t n_terms) {
    ProbabilityAssignment a;
    a.p = Eigen::ArrayXd::Ones(static_cast<Eigen::Index>(n_terms));
    a.active_count = n_terms;
    a.tag = AnsatzTag::all_one;
    a.mu = static_cast<double>(n_terms);
    return a;
}

void validate_assignment(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment) {
    require_probabilities(spec.magnitudes(), assignment.p);
    if (assignment.active_count > spec.size()) {
        throw DomainError("active_count exceeds the number of terms");
    }
    std::vector<std::size_t> order(spec.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const Eigen::ArrayXd h = spec.magnitudes();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return h(static_cast<Eigen::Index>(a)) > h(static_cast<Eigen::Index>(b));
    });
    for (std::size_t k = 0; k < assignment.active_count; ++k) {
        if (assignment.p(static_cast<Eigen::Index>(order[k])) != 1.0) {
            throw DomainError("active term " + std::to_string(order[k]) + " has p != 1");
        }
    }
}

std::string_view to_string(BoundMethod method) {
    switch (method) {
        case BoundMethod::theorem2: return "theorem2";
        case BoundMethod::theorem1: return "theorem1";
        case BoundMethod::corollary_p1: return "corollary_p1";
        case BoundMethod::qdrift: return "qdrift";
        case BoundMethod::trotter1: return "trotter1";
        case BoundMethod::theorem2_commutator: return "theorem2_commutator";
    }
    return "unknown";
}

DerivedVectors derive_vectors(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p) {
    require_probabilities(h, p);
    const Eigen::ArrayXd h2 = h.square();
    return {
        (p.inverse() - 1.0) * h2,
        (p.square().inverse() - 1.0) * h2 * h,
        (3.0 / p - 1.0) * h2,
        h / p,
    };
}

double tail_product_factor(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p) {
    require_probabilities(h, p);
    distinct::CompensatedSum<long double> log_p;
    for (Eigen::Index j = 0; j < p.size(); ++j) log_p.add(std::log(static_cast<long double>(p(j))));
    const double q_sum = distinct::sum((h / p).eval());
    if (!(q_sum > 0.0)) return 0.0;
    const long double exponent = log_p.value() + 4.0L * std::log(static_cast<long double>(q_sum));
    if (exponent < std::log(static_cast<long double>(std::numeric_limits<double>::min()))) {
        return 0.0;
    }
    return static_cast<double>(std::exp(exponent));
}

BoundBreakdown theorem2_bound(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p, double t,
                              double gates) {
    require_three_terms(h.size());
    require_positive(t, "t");
    require_positive(gates, "G");
    const DerivedVectors d = derive_vectors(h, p);
    const double lambda = distinct::sum(h);
    const double mu = distinct::sum(p);

    BoundBreakdown b;
    b.method = BoundMethod::theorem2;
    b.inputs = {t, gates, static_cast<std::size_t>(h.size()), lambda, mu};

    const double second = 2.0 * t * t * mu / gates;
    const double third = std::pow(t, 3) * mu * mu / (gates * gates);
    b.eps1 = second * distinct::sum(d.u);
    b.eps2 = (4.0 / 3.0) * third * (distinct::sum(d.v) + distinct::pair_sum(d.w, h)) +
             (16.0 / 9.0) * third * distinct::triple_sum_aaa(h);
    const Tails tails = tail_terms(h, p, lambda, mu, t, gates);
    b.eps31 = tails.eps31;
    b.eps32 = tails.eps32;
    return finish(b);
}

BoundBreakdown theorem2_bound(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment,
                              double t, double gates) {
    return theorem2_bound(spec.magnitudes(), assignment.p, t, gates);
}

BoundBreakdown theorem1_bound(const Eigen::ArrayXd& h, const Eigen::ArrayXd& p, double t,
                              double gates) {
    require_three_terms(h.size());
    require_positive(t, "t");
    require_positive(gates, "G");
    const DerivedVectors d = derive_vectors(h, p);
    const double lambda = distinct::sum(h);
    const double mu = distinct::sum(p);

    BoundBreakdown b;
    b.method = BoundMethod::theorem1;
    b.inputs = {t, gates, static_cast<std::size_t>(h.size()), lambda, mu};

    // u, v, w are nonnegative, so their sums are their 1-norms.
    const double k = distinct::sum(d.v) + lambda * distinct::sum(d.w) +
                     4.0 * std::pow(lambda, 3) / 3.0;
    b.eps1 = 2.0 * t * t * mu / gates * distinct::sum(d.u);
    b.eps2 = 4.0 * std::pow(t, 3) * mu * mu / (3.0 * gates * gates) * k;
    const Tails tails = tail_terms(h, p, lambda, mu, t, gates);
    b.eps31 = tails.eps31;
    b.eps32 = tails.eps32;
    return finish(b);
}

BoundBreakdown theorem1_bound(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment,
                              double t, double gates) {
    return theorem1_bound(spec.magnitudes(), assignment.p, t, gates);
}

BoundBreakdown corollary_p1_bound(const Eigen::ArrayXd& h, double t, double gates) {
    require_three_terms(h.size());
    require_positive(t, "t");
    require_positive(gates, "G");
    const double n = static_cast<double>(h.size());
    const double lambda = distinct::sum(h);
    const double h2 = distinct::sum(h.square().eval());

    BoundBreakdown b;
    b.method = BoundMethod::corollary_p1;
    b.inputs = {t, gates, static_cast<std::size_t>(h.size()), lambda, n};
    b.eps2 = 8.0 * std::pow(t, 3) * n * n / (3.0 * gates * gates) *
             (lambda * h2 + 2.0 * std::pow(lambda, 3) / 3.0);
    const Tails tails = tail_terms(h, Eigen::ArrayXd::Ones(h.size()), lambda, n, t, gates);
    b.eps31 = tails.eps31;
    b.eps32 = tails.eps32;
    return finish(b);
}

BoundBreakdown corollary_p1_bound(const HamiltonianSpec& spec, double t, double gates) {
    return corollary_p1_bound(spec.magnitudes(), t, gates);
}

BoundBreakdown qdrift_bound(const HamiltonianSpec& spec, double t, double gates) {
    require_positive(t, "t");
    require_positive(gates, "G");
    const double lambda = lambda_norm(spec);
    BoundBreakdown b;
    b.method = BoundMethod::qdrift;
    b.inputs = {t, gates, spec.size(), lambda, 1.0};
    b.total = 4.0 * lambda * lambda * t * t / gates;
    return b;
}

BoundBreakdown trotter1_bound(const HamiltonianSpec& spec, double t, double gates) {
    require_positive(t, "t");
    require_positive(gates, "G");
    const double lambda = lambda_norm(spec);
    const double n = static_cast<double>(spec.size());
    BoundBreakdown b;
    b.method = BoundMethod::trotter1;
    b.inputs = {t, gates, spec.size(), lambda, n};
    b.total = n * lambda * lambda * t * t / (2.0 * gates);
    return b;
}

double nested_commutator_sum(const HamiltonianSpec& spec) {
    const std::size_t n = spec.size();
    if (n > kCommutatorTermLimit) {
        throw SizeGuardError("commutator refinement supports at most " +
                             std::to_string(kCommutatorTermLimit) + " terms, got " +
                             std::to_string(n));
    }
    const Eigen::ArrayXd h = spec.magnitudes();
    distinct::CompensatedSum<long double> acc;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const ScaledPauli jk = commutator(spec[j].pauli, spec[k].pauli);
            for (std::size_t l = k + 1; l < n; ++l) {
                const ScaledPauli kl = commutator(spec[k].pauli, spec[l].pauli);
                const double left = commutator(ScaledPauli{1.0, spec[l].pauli}, jk).operator_norm();
                const double right = commutator(kl, ScaledPauli{1.0, spec[j].pauli}).operator_norm();
                if (left + right == 0.0) continue;
                acc.add(static_cast<long double>(left + right) * h(static_cast<Eigen::Index>(j)) *
                        h(static_cast<Eigen::Index>(k)) * h(static_cast<Eigen::Index>(l)));
            }
        }
    }
    return static_cast<double>(acc.value());
}

BoundBreakdown commutator_refined_bound(const HamiltonianSpec& spec,
                                        const ProbabilityAssignment& assignment, double t,
                                        double gates) {
    const double nested = nested_commutator_sum(spec);
    BoundBreakdown b = theorem2_bound(spec, assignment, t, gates);
    const Eigen::ArrayXd h = spec.magnitudes();
    const DerivedVectors d = derive_vectors(h, assignment.p);
    const double third = std::pow(t, 3) * b.inputs.mu * b.inputs.mu / (gates * gates);
    b.method = BoundMethod::theorem2_commutator;
    b.eps2 = (4.0 / 3.0) * third * (distinct::sum(d.v) + distinct::pair_sum(d.w, h)) +
             (8.0 / 9.0) * third * nested;
    return finish(b);
}

ProbabilityFile parse_probabilities(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("probability document must be a JSON object");
    const auto format = doc.find("format");
    if (format == doc.end() || !format->is_string() ||
        format->get<std::string>() != kProbabilityTag) {
        throw FormatError(std::string("format tag must be \"") + kProbabilityTag + "\"");
    }

    ProbabilityFile out;
    const auto order = doc.find("hamiltonian_order");
    if (order == doc.end() || !order->is_string()) {
        throw FormatError("hamiltonian_order must be \"file\" or \"sorted_desc\"");
    }
    if (*order == "file") {
        out.order = TermOrder::file;
    } else if (*order == "sorted_desc") {
        out.order = TermOrder::sorted_desc;
    } else {
        throw FormatError("hamiltonian_order must be \"file\" or \"sorted_desc\"");
    }

    const auto active = doc.find("active_count");
    if (active == doc.end() || !active->is_number_integer() || active->get<long long>() < 0) {
        throw FormatError("active_count must be a nonnegative integer");
    }
    out.assignment.active_count = active->get<std::size_t>();

    const auto p = doc.find("p");
    if (p == doc.end() || !p->is_array()) throw FormatError("p must be an array");
    out.assignment.p.resize(static_cast<Eigen::Index>(p->size()));
    for (std::size_t j = 0; j < p->size(); ++j) {
        const auto& v = (*p)[j];
        if (!v.is_number() || !std::isfinite(v.get<double>())) {
            throw FormatError("p[" + std::to_string(j) + "] is not a finite number");
        }
        out.assignment.p(static_cast<Eigen::Index>(j)) = v.get<double>();
    }
    out.assignment.tag = AnsatzTag::custom;
    out.assignment.mu = out.assignment.expected_terms();
    return out;
}

ProbabilityFile read_probabilities_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open probability file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_probabilities(buffer.str());
}

std::string serialize_probabilities(const ProbabilityFile& file) {
    nlohmann::ordered_json doc;
    doc["format"] = kProbabilityTag;
    doc["hamiltonian_order"] = file.order == TermOrder::file ? "file" : "sorted_desc";
    doc["active_count"] = file.assignment.active_count;
    auto p = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < file.assignment.p.size(); ++j) p.push_back(file.assignment.p(j));
    doc["p"] = std::move(p);
    return doc.dump() + "\n";
}

}  // namespace sparsto
