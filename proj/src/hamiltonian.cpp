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

#include "sparsto/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "sparsto/errors.hpp"
#include "sparsto/moments.hpp"
#include "sparsto/random.hpp"

namespace sparsto {

namespace {

constexpr const char* kFormatTag = "hamiltonian-terms-v1";

void validate(std::size_t n_qubits, const std::vector<HamTerm>& terms) {
    if (n_qubits == 0) throw FormatError("n_qubits must be positive");
    if (terms.empty()) throw FormatError("Hamiltonian has no terms");
    std::unordered_set<std::string> seen;
    seen.reserve(terms.size());
    for (const auto& term : terms) {
        const auto& label = term.pauli.label();
        if (label.size() != n_qubits) {
            throw FormatError("Pauli label \"" + label + "\" has length " +
                              std::to_string(label.size()) + ", expected " +
                              std::to_string(n_qubits));
        }
        if (!std::isfinite(term.coeff)) throw FormatError("non-finite coefficient on " + label);
        if (term.coeff == 0.0) throw FormatError("zero coefficient on " + label);
        if (term.pauli.is_identity()) throw FormatError("identity term in Hamiltonian");
        if (!seen.insert(label).second) throw FormatError("duplicate Pauli label " + label);
    }
}

}  // namespace

HamiltonianSpec::HamiltonianSpec(std::size_t n_qubits, std::vector<HamTerm> terms,
                                 std::string provenance)
    : n_qubits_(n_qubits), terms_(std::move(terms)), provenance_(std::move(provenance)) {
    validate(n_qubits_, terms_);
}

Eigen::ArrayXd HamiltonianSpec::magnitudes() const {
    Eigen::ArrayXd h(static_cast<Eigen::Index>(terms_.size()));
    for (std::size_t j = 0; j < terms_.size(); ++j) {
        h(static_cast<Eigen::Index>(j)) = std::abs(terms_[j].coeff);
    }
    return h;
}

Eigen::ArrayXd HamiltonianSpec::coefficients() const {
    Eigen::ArrayXd c(static_cast<Eigen::Index>(terms_.size()));
    for (std::size_t j = 0; j < terms_.size(); ++j) c(static_cast<Eigen::Index>(j)) = terms_[j].coeff;
    return c;
}

ParsedHamiltonian parse_hamiltonian(std::string_view document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("Hamiltonian document must be a JSON object");

    const auto format = doc.find("format");
    if (format == doc.end() || !format->is_string() || format->get<std::string>() != kFormatTag) {
        throw FormatError(std::string("format tag must be \"") + kFormatTag + "\"");
    }
    const auto n_field = doc.find("n_qubits");
    if (n_field == doc.end() || !n_field->is_number_integer() || n_field->get<long long>() <= 0) {
        throw FormatError("n_qubits must be a positive integer");
    }
    const auto n_qubits = n_field->get<std::size_t>();

    std::string provenance;
    if (const auto p = doc.find("provenance"); p != doc.end()) {
        if (!p->is_string()) throw FormatError("provenance must be a string");
        provenance = p->get<std::string>();
    }

    const auto terms_field = doc.find("terms");
    if (terms_field == doc.end() || !terms_field->is_array()) {
        throw FormatError("terms must be an array");
    }

    std::vector<std::string> warnings;
    std::vector<HamTerm> terms;
    terms.reserve(terms_field->size());
    for (const auto& entry : *terms_field) {
        if (!entry.is_object()) throw FormatError("each term must be an object");
        const auto coeff = entry.find("coeff");
        const auto pauli = entry.find("pauli");
        if (coeff == entry.end() || !coeff->is_number()) throw FormatError("term without numeric coeff");
        if (pauli == entry.end() || !pauli->is_string()) throw FormatError("term without pauli string");
        HamTerm term{coeff->get<double>(), PauliString(pauli->get<std::string>())};
        if (term.pauli.size() == n_qubits && term.pauli.is_identity()) {
            warnings.push_back("dropped identity term with coefficient " +
                                   nlohmann::json(term.coeff).dump());
            continue;
        }
        terms.push_back(std::move(term));
    }
    return {HamiltonianSpec(n_qubits, std::move(terms), std::move(provenance)), std::move(warnings)};
}

ParsedHamiltonian read_hamiltonian_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open Hamiltonian file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_hamiltonian(buffer.str());
}

std::string serialize_hamiltonian(const HamiltonianSpec& spec) {
    nlohmann::ordered_json doc;
    doc["format"] = kFormatTag;
    doc["n_qubits"] = spec.n_qubits();
    doc["provenance"] = spec.provenance();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& term : spec.terms()) {
        nlohmann::ordered_json t;
        t["coeff"] = term.coeff;
        t["pauli"] = term.pauli.label();
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc.dump(2) + "\n";
}

double lambda_norm(const HamiltonianSpec& spec) {
    return distinct::sum(spec.magnitudes());
}

HamiltonianSpec sort_terms_desc(const HamiltonianSpec& spec) {
    std::vector<HamTerm> terms = spec.terms();
    std::stable_sort(terms.begin(), terms.end(), [](const HamTerm& a, const HamTerm& b) {
        return std::abs(a.coeff) > std::abs(b.coeff);
    });
    return HamiltonianSpec(spec.n_qubits(), std::move(terms), spec.provenance());
}

bool is_sorted_desc(const HamiltonianSpec& spec) {
    const auto& terms = spec.terms();
    return std::is_sorted(terms.begin(), terms.end(), [](const HamTerm& a, const HamTerm& b) {
        return std::abs(a.coeff) > std::abs(b.coeff);
    });
}

namespace {

std::string label_from_index(std::uint64_t index, std::size_t n_qubits) {
    static constexpr char kSymbols[] = {'I', 'X', 'Y', 'Z'};
    std::string label(n_qubits, 'I');
    for (std::size_t q = n_qubits; q-- > 0;) {
        label[q] = kSymbols[index % 4];
        index /= 4;
    }
    return label;
}

std::string random_label(RandomStream& rng, std::size_t n_qubits) {
    static constexpr char kSymbols[] = {'I', 'X', 'Y', 'Z'};
    std::string label(n_qubits, 'I');
    for (auto& c : label) c = kSymbols[rng.below(4)];
    return label;
}

}  // namespace

HamiltonianSpec synth_power_law(std::size_t n_terms, double exponent, std::size_t n_qubits,
                                std::uint64_t seed) {
    if (n_terms == 0) throw DomainError("synth_power_law: need at least one term");
    if (n_qubits == 0) throw DomainError("synth_power_law: need at least one qubit");
    if (!(exponent > 0.0) || !std::isfinite(exponent)) {
        throw DomainError("synth_power_law: exponent must be positive");
    }

    // Number of non-identity labels, saturated for large n.
    const bool huge = n_qubits >= 31;
    const std::uint64_t available = huge ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * n_qubits)) - 1;
    if (n_terms > available) {
        throw DomainError("synth_power_law: " + std::to_string(n_terms) + " terms exceed the " +
                          std::to_string(available) + " non-identity Pauli strings on " +
                          std::to_string(n_qubits) + " qubits");
    }

    RandomStream label_rng = substream(seed, 0);
    std::vector<std::string> labels;
    labels.reserve(n_terms);
    if (!huge && available <= (std::uint64_t{1} << 20) && n_terms * 2 > available) {
        // Dense regime: partial Fisher-Yates over all non-identity indices.
        std::vector<std::uint64_t> pool(available);
        std::iota(pool.begin(), pool.end(), std::uint64_t{1});
        for (std::size_t i = 0; i < n_terms; ++i) {
            const std::uint64_t k = i + label_rng.below(available - i);
            std::swap(pool[i], pool[k]);
            labels.push_back(label_from_index(pool[i], n_qubits));
        }
    } else {
        std::unordered_set<std::string> used;
        used.reserve(n_terms * 2);
        const std::string identity(n_qubits, 'I');
        while (labels.size() < n_terms) {
            std::string label = random_label(label_rng, n_qubits);
            if (label == identity || !used.insert(label).second) continue;
            labels.push_back(std::move(label));
        }
    }

    RandomStream sign_rng = substream(seed, 1);
    std::vector<HamTerm> terms;
    terms.reserve(n_terms);
    for (std::size_t j = 0; j < n_terms; ++j) {
        const double magnitude = std::pow(static_cast<double>(j + 1), -exponent);
        const double sign = sign_rng.coin() ? -1.0 : 1.0;
        terms.push_back({sign * magnitude, PauliString(std::move(labels[j]))});
    }

    std::ostringstream provenance;
    provenance << "synthetic power-law: L=" << n_terms << " exponent=" << nlohmann::json(exponent).dump()
               << " n_qubits=" << n_qubits << " seed=" << seed;
    return HamiltonianSpec(n_qubits, std::move(terms), provenance.str());
}

}  // namespace sparsto
