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

#include "sparsto/report_json.hpp"

namespace sparsto {

nlohmann::ordered_json to_json(const BoundBreakdown& bound) {
    nlohmann::ordered_json doc;
    doc["method"] = std::string(to_string(bound.method));
    doc["eps1"] = bound.eps1;
    doc["eps2"] = bound.eps2;
    doc["eps31"] = bound.eps31;
    doc["eps32"] = bound.eps32;
    doc["total"] = bound.total;
    doc["inputs"] = {{"t", bound.inputs.t},
                     {"G", bound.inputs.gates},
                     {"L", bound.inputs.n_terms},
                     {"lambda", bound.inputs.lambda},
                     {"mu", bound.inputs.mu}};
    return doc;
}

nlohmann::ordered_json to_json(const ChannelErrorReport& report) {
    nlohmann::ordered_json doc;
    doc["metric"] = report.metric;
    doc["value"] = report.value;
    doc["bound_total"] = report.bound_total;
    doc["samples"] = report.samples;
    doc["standard_error"] = report.standard_error;
    return doc;
}

nlohmann::ordered_json to_json(const OptimizationReport& report) {
    std::size_t feasible = 0;
    for (const GridRecord& r : report.grid) feasible += r.feasible ? 1 : 0;
    nlohmann::ordered_json doc;
    doc["ansatz"] = std::string(to_string(report.best_config.kind));
    doc["active_count"] = report.best_config.active_count;
    doc["active_fraction"] =
        static_cast<double>(report.best_config.active_count) /
        static_cast<double>(report.best_assignment.p.size());
    doc["mu_prime"] = report.best_config.mu_prime;
    doc["mu"] = report.best_assignment.expected_terms();
    doc["bound"] = to_json(report.best_bound);
    doc["grid_points"] = report.grid.size();
    doc["feasible_points"] = feasible;
    auto p = nlohmann::ordered_json::array();
    for (Eigen::Index j = 0; j < report.best_assignment.p.size(); ++j) {
        p.push_back(report.best_assignment.p(j));
    }
    doc["p"] = std::move(p);
    return doc;
}

}  // namespace sparsto
