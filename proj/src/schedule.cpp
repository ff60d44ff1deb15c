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

#include "sparsto/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "sparsto/errors.hpp"
#include "sparsto/random.hpp"

namespace sparsto {

namespace {

constexpr const char* kScheduleTag = "gate-schedule-v1";

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(std::string(name) + " must be positive and finite");
    }
}

}  // namespace

std::size_t GateSchedule::gate_count() const {
    return std::accumulate(repeats.begin(), repeats.end(), std::size_t{0},
                           [](std::size_t acc, const TrotterStep& s) { return acc + s.gates.size(); });
}

std::vector<double> step_duration_schedule(double t, double gates, double mu) {
    require_positive(t, "t");
    require_positive(mu, "mu");
    if (!(gates >= mu) || !std::isfinite(gates)) {
        throw DomainError("expected gate count G must be at least mu");
    }
    const double ratio = gates / mu;
    const auto full = static_cast<std::size_t>(std::floor(ratio));
    const double step = mu * t / gates;
    std::vector<double> durations(full, step);
    if (ratio > static_cast<double>(full)) {
        const double last = t - static_cast<double>(full) * step;
        if (last > 0.0) durations.push_back(last);
    }
    return durations;
}

GateSchedule compile_sparsto(const HamiltonianSpec& spec, const ProbabilityAssignment& assignment,
                             double t, double gates, std::uint64_t seed) {
    validate_assignment(spec, assignment);
    const std::vector<double> durations =
        step_duration_schedule(t, gates, assignment.expected_terms());

    GateSchedule schedule;
    schedule.n_qubits = spec.n_qubits();
    schedule.method = "sparsto";
    schedule.seed = seed;
    schedule.t = t;
    schedule.expected_gates = gates;
    schedule.repeats.resize(durations.size());

    const std::size_t n = spec.size();
    std::vector<std::size_t> kept;
    kept.reserve(n);
    for (std::size_t k = 0; k < durations.size(); ++k) {
        RandomStream rng = substream(seed, k);
        TrotterStep& step = schedule.repeats[k];
        step.repeat_index = k;
        step.duration = durations[k];
        step.direction = rng.coin() ? Direction::reverse : Direction::forward;

        kept.clear();
        for (std::size_t j = 0; j < n; ++j) {
            const double pj = assignment.p(static_cast<Eigen::Index>(j));
            const double draw = rng.uniform01();
            if (pj >= 1.0 || draw < pj) kept.push_back(j);
        }
        if (step.direction == Direction::reverse) std::reverse(kept.begin(), kept.end());
        step.gates.reserve(kept.size());
        for (std::size_t j : kept) {
            const double pj = assignment.p(static_cast<Eigen::Index>(j));
            step.gates.push_back({spec[j].pauli, step.duration * spec[j].coeff / pj});
        }
    }
    return schedule;
}

GateSchedule compile_qdrift(const HamiltonianSpec& spec, double t, double gates, std::uint64_t seed) {
    require_positive(t, "t");
    require_positive(gates, "G");
    if (gates != std::floor(gates) || gates > 1e15) {
        throw DomainError("qDRIFT needs an integer gate count");
    }
    const auto count = static_cast<std::size_t>(gates);

    // Cumulative magnitudes for inverse-CDF sampling.
    const Eigen::ArrayXd h = spec.magnitudes();
    std::vector<double> cumulative(static_cast<std::size_t>(h.size()));
    double running = 0.0;
    for (Eigen::Index j = 0; j < h.size(); ++j) {
        running += h(j);
        cumulative[static_cast<std::size_t>(j)] = running;
    }
    const double lambda = lambda_norm(spec);
    const double angle = lambda * t / gates;

    GateSchedule schedule;
    schedule.n_qubits = spec.n_qubits();
    schedule.method = "qdrift";
    schedule.seed = seed;
    schedule.t = t;
    schedule.expected_gates = gates;
    TrotterStep& step = schedule.repeats.emplace_back();
    step.repeat_index = 0;
    step.duration = t;
    step.direction = Direction::forward;
    step.gates.reserve(count);

    RandomStream rng = substream(seed, 0);
    for (std::size_t g = 0; g < count; ++g) {
        const double target = rng.uniform01() * running;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
        if (it == cumulative.end()) --it;
        const auto j = static_cast<std::size_t>(it - cumulative.begin());
        step.gates.push_back({spec[j].pauli, std::copysign(angle, spec[j].coeff)});
    }
    return schedule;
}

GateSchedule compile_trotter1(const HamiltonianSpec& spec, double t, std::size_t r) {
    require_positive(t, "t");
    if (r == 0) throw DomainError("Trotter step count must be positive");
    const double duration = t / static_cast<double>(r);

    GateSchedule schedule;
    schedule.n_qubits = spec.n_qubits();
    schedule.method = "trotter1";
    schedule.seed = 0;
    schedule.t = t;
    schedule.expected_gates = static_cast<double>(r * spec.size());
    schedule.repeats.resize(r);
    for (std::size_t k = 0; k < r; ++k) {
        TrotterStep& step = schedule.repeats[k];
        step.repeat_index = k;
        step.duration = duration;
        step.direction = Direction::forward;
        step.gates.reserve(spec.size());
        for (const auto& term : spec.terms()) step.gates.push_back({term.pauli, duration * term.coeff});
    }
    return schedule;
}

std::string serialize_schedule(const GateSchedule& schedule) {
    std::ostringstream out;
    nlohmann::ordered_json header;
    header["format"] = kScheduleTag;
    header["n_qubits"] = schedule.n_qubits;
    header["method"] = schedule.method;
    header["seed"] = schedule.seed;
    header["t"] = schedule.t;
    header["expected_gates"] = schedule.expected_gates;
    out << header.dump() << '\n';
    for (const auto& step : schedule.repeats) {
        nlohmann::ordered_json line;
        line["repeat"] = step.repeat_index;
        line["duration"] = step.duration;
        line["direction"] = step.direction == Direction::forward ? "forward" : "reverse";
        auto gates = nlohmann::ordered_json::array();
        for (const auto& g : step.gates) {
            nlohmann::ordered_json gate;
            gate["pauli"] = g.pauli.label();
            gate["angle"] = g.angle;
            gates.push_back(std::move(gate));
        }
        line["gates"] = std::move(gates);
        out << line.dump() << '\n';
    }
    return out.str();
}

GateSchedule parse_schedule(std::string_view document) {
    std::istringstream in{std::string(document)};
    std::string line;
    GateSchedule schedule;
    bool have_header = false;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto j = nlohmann::json::parse(line);
            if (!have_header) {
                if (j.value("format", std::string{}) != kScheduleTag) {
                    throw FormatError(std::string("format tag must be \"") + kScheduleTag + "\"");
                }
                schedule.n_qubits = j.at("n_qubits").get<std::size_t>();
                schedule.method = j.at("method").get<std::string>();
                schedule.seed = j.at("seed").get<std::uint64_t>();
                schedule.t = j.at("t").get<double>();
                schedule.expected_gates = j.at("expected_gates").get<double>();
                have_header = true;
                continue;
            }
            TrotterStep step;
            step.repeat_index = j.at("repeat").get<std::size_t>();
            step.duration = j.at("duration").get<double>();
            const auto direction = j.at("direction").get<std::string>();
            if (direction != "forward" && direction != "reverse") {
                throw FormatError("direction must be \"forward\" or \"reverse\"");
            }
            step.direction = direction == "forward" ? Direction::forward : Direction::reverse;
            for (const auto& g : j.at("gates")) {
                PauliString pauli(g.at("pauli").get<std::string>());
                if (pauli.size() != schedule.n_qubits) {
                    throw FormatError("gate label length does not match n_qubits");
                }
                step.gates.push_back({std::move(pauli), g.at("angle").get<double>()});
            }
            schedule.repeats.push_back(std::move(step));
        }
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed schedule: ") + e.what());
    }
    if (!have_header) throw FormatError("schedule has no header line");
    return schedule;
}

}  // namespace sparsto
