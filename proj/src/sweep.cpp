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

#include "sparsto/sweep.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "sparsto/ansatz.hpp"
#include "sparsto/bounds.hpp"
#include "sparsto/errors.hpp"
#include "sparsto/format.hpp"
#include "sparsto/parallel.hpp"

namespace sparsto {

std::vector<double> gate_grid(double gates_min, double gates_max, std::size_t points, bool log) {
    if (!(gates_min > 0.0) || !std::isfinite(gates_max) || !(gates_max >= gates_min)) {
        throw DomainError("gate range must satisfy 0 < min <= max");
    }
    if (points == 0) throw DomainError("sweep needs at least one point");
    if (points == 1) {
        if (gates_min != gates_max) throw DomainError("a single sweep point needs min == max");
        return {gates_min};
    }
    std::vector<double> grid(points);
    const double last = static_cast<double>(points - 1);
    if (log) {
        const double a = std::log10(gates_min);
        const double b = std::log10(gates_max);
        for (std::size_t i = 0; i < points; ++i) {
            grid[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / last);
        }
    } else {
        for (std::size_t i = 0; i < points; ++i) {
            grid[i] = gates_min + (gates_max - gates_min) * static_cast<double>(i) / last;
        }
    }
    grid.front() = gates_min;
    grid.back() = gates_max;
    for (std::size_t i = 1; i < points; ++i) {
        if (!(grid[i] > grid[i - 1])) throw DomainError("gate grid is not strictly increasing");
    }
    return grid;
}

std::vector<SweepRow> run_sweep(const HamiltonianSpec& spec, double t,
                                const std::vector<double>& gates, unsigned threads) {
    const HamiltonianSpec sorted = sort_terms_desc(spec);
    if (sorted.size() < 3) throw DomainError("sweeps require at least 3 terms");
    const double n = static_cast<double>(sorted.size());
    const Eigen::ArrayXd h = sorted.magnitudes();
    const Eigen::ArrayXd ones = Eigen::ArrayXd::Ones(h.size());
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();

    std::vector<SweepRow> rows(gates.size());
    parallel_for(gates.size(), threads, [&](std::size_t i) {
        const double g = gates[i];
        SweepRow& row = rows[i];
        row.G = g;
        try {
            const OptimizationReport linear = grid_optimize(sorted, t, g, AnsatzKind::linear);
            row.eps_sparsto_linear = linear.best_bound.total;
            row.best_active_fraction =
                static_cast<double>(linear.best_config.active_count) / n;
            row.best_mu_prime = linear.best_config.mu_prime;
        } catch (const DomainError&) {
            row.eps_sparsto_linear = row.best_active_fraction = row.best_mu_prime = nan;
        }
        try {
            row.eps_sparsto_uniform = grid_optimize(sorted, t, g, AnsatzKind::uniform).best_bound.total;
        } catch (const DomainError&) {
            row.eps_sparsto_uniform = nan;
        }
        row.eps_r1otrott = theorem2_bound(h, ones, t, g).total;
        row.eps_qdrift = qdrift_bound(sorted, t, g).total;
        const double r = std::max(1.0, std::floor(g / n));
        row.eps_trotter1 = trotter1_bound(sorted, t, r * n).total;
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << kSweepHeader << '\n';
    for (const SweepRow& r : rows) {
        out << format_double(r.G) << ',' << format_double(r.eps_sparsto_linear) << ','
            << format_double(r.eps_sparsto_uniform) << ',' << format_double(r.eps_r1otrott) << ','
            << format_double(r.eps_qdrift) << ',' << format_double(r.eps_trotter1) << ','
            << format_double(r.best_active_fraction) << ',' << format_double(r.best_mu_prime)
            << '\n';
    }
    return out.str();
}

}  // namespace sparsto
