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

#include "sparsto/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sparsto/errors.hpp"
#include "sparsto/format.hpp"
#include "sparsto/moments.hpp"
#include "sparsto/parallel.hpp"

namespace sparsto {

namespace {

void require_sorted(const HamiltonianSpec& spec) {
    if (!is_sorted_desc(spec)) {
        throw DomainError("Hamiltonian terms must be sorted by decreasing magnitude");
    }
}

void require_active_count(const HamiltonianSpec& spec, std::size_t active_count) {
    if (active_count > spec.size()) {
        throw DomainError("active set size " + std::to_string(active_count) + " exceeds L = " +
                          std::to_string(spec.size()));
    }
}

double inactive_sum(const Eigen::ArrayXd& v, std::size_t active_count) {
    const auto n = v.size() - static_cast<Eigen::Index>(active_count);
    return distinct::sum(v.tail(n));
}

}  // namespace

std::string_view to_string(AnsatzKind kind) {
    return kind == AnsatzKind::linear ? "linear" : "uniform";
}

ProbabilityAssignment linear_ansatz_probs(const HamiltonianSpec& spec_sorted,
                                          std::size_t active_count, double mu) {
    require_sorted(spec_sorted);
    require_active_count(spec_sorted, active_count);
    const std::size_t n = spec_sorted.size();
    if (active_count == n) {
        ProbabilityAssignment all = all_ones_assignment(n);
        all.tag = AnsatzTag::linear;
        return all;
    }
    const double active = static_cast<double>(active_count);
    if (!(mu > active) || mu > static_cast<double>(n)) {
        throw DomainError("linear ansatz needs |A| < mu <= L (|A| = " + std::to_string(active_count) +
                          ", mu = " + format_double(mu) + ", L = " + std::to_string(n) + ")");
    }

    const Eigen::ArrayXd h = spec_sorted.magnitudes();
    const double tail_mass = inactive_sum(h, active_count);
    const double budget = mu - active;

    ProbabilityAssignment a;
    a.p = Eigen::ArrayXd::Ones(static_cast<Eigen::Index>(n));
    for (std::size_t j = active_count; j < n; ++j) {
        const auto i = static_cast<Eigen::Index>(j);
        const double pj = budget * h(i) / tail_mass;
        if (!(pj < 1.0)) {
            throw InfeasibleError("linear ansatz infeasible: p[" + std::to_string(j) + "] = " +
                                      format_double(pj) + " >= 1",
                                  j);
        }
        a.p(i) = pj;
    }
    a.active_count = active_count;
    a.tag = AnsatzTag::linear;
    a.mu = mu;
    a.scale = budget / tail_mass;
    return a;
}

ProbabilityAssignment uniform_ansatz_probs(const HamiltonianSpec& spec_sorted,
                                           std::size_t active_count, double mu_prime) {
    require_sorted(spec_sorted);
    require_active_count(spec_sorted, active_count);
    if (!(mu_prime > 0.0 && mu_prime <= 1.0)) {
        throw DomainError("mu' must lie in (0, 1], got " + format_double(mu_prime));
    }
    const std::size_t n = spec_sorted.size();
    ProbabilityAssignment a;
    a.p = Eigen::ArrayXd::Ones(static_cast<Eigen::Index>(n));
    a.p.tail(static_cast<Eigen::Index>(n - active_count)).setConstant(mu_prime);
    a.active_count = active_count;
    a.tag = AnsatzTag::uniform;
    a.mu = static_cast<double>(active_count) + mu_prime * static_cast<double>(n - active_count);
    return a;
}

KktReport kkt_verify(const HamiltonianSpec& spec_sorted, const ProbabilityAssignment& assignment,
                     double tol) {
    KktReport report;
    const std::size_t n = spec_sorted.size();
    const std::size_t active = assignment.active_count;
    if (static_cast<std::size_t>(assignment.p.size()) != n || active > n) {
        report.diagnostics.push_back("assignment does not match the Hamiltonian");
        return report;
    }
    const Eigen::ArrayXd h = spec_sorted.magnitudes();
    const Eigen::ArrayXd& p = assignment.p;

    report.feasible = true;
    for (std::size_t j = 0; j < n; ++j) {
        const double pj = p(static_cast<Eigen::Index>(j));
        const bool ok = j < active ? pj == 1.0 : (pj > 0.0 && pj < 1.0);
        if (!ok) {
            report.feasible = false;
            report.diagnostics.push_back("p[" + std::to_string(j) + "] = " + format_double(pj) +
                                         (j < active ? " on the active set" : " outside (0, 1)"));
        }
    }

    const double target = assignment.mu - static_cast<double>(active);
    if (active == n) {
        report.proportional = true;
        report.stationary = true;
        report.budget_residual = std::abs(target);
        report.budget = report.budget_residual <= tol;
    } else {
        const auto tail = static_cast<Eigen::Index>(n - active);
        const Eigen::ArrayXd hi = h.tail(tail);
        const Eigen::ArrayXd pi = p.tail(tail);
        const double h_mass = distinct::sum(hi);
        const double p_mass = distinct::sum(pi);

        const double c = p_mass / h_mass;
        report.proportionality_residual = (pi - c * hi).abs().maxCoeff();
        report.proportional = report.proportionality_residual <= tol;

        report.budget_residual = std::abs(p_mass - target);
        report.budget = report.budget_residual <= tol;

        // With r s^2 = 1 the multiplier is sqrt(u) = sum_inactive h / mu_bar;
        // residuals are scaled by the largest inactive magnitude.
        if (target > 0.0) {
            const double sqrt_u = h_mass / target;
            report.stationarity_residual = (sqrt_u * pi - hi).abs().maxCoeff() / hi.maxCoeff();
            report.stationary = report.stationarity_residual <= tol;
        } else {
            report.stationarity_residual = std::numeric_limits<double>::infinity();
            report.stationary = false;
        }
        if (!report.proportional) {
            report.diagnostics.push_back("inactive p not proportional to h (residual " +
                                         format_double(report.proportionality_residual) + ")");
        }
        if (!report.stationary) {
            report.diagnostics.push_back("stationarity residual " +
                                         format_double(report.stationarity_residual));
        }
    }
    if (!report.budget) {
        report.diagnostics.push_back("inactive budget residual " +
                                     format_double(report.budget_residual));
    }
    report.satisfied = report.feasible && report.proportional && report.budget && report.stationary;
    return report;
}

AnsatzGrid AnsatzGrid::standard() {
    AnsatzGrid grid;
    for (int k = 0; k <= 10; ++k) grid.active_fractions.push_back(k / 10.0);
    grid.mu_primes = {1e-5, 1e-4, 1e-3};
    for (int k = 1; k <= 10; ++k) grid.mu_primes.push_back(k / 10.0);
    return grid;
}

OptimizationReport grid_optimize(const HamiltonianSpec& spec_sorted, double t, double gates,
                                 AnsatzKind kind, const AnsatzGrid& grid, unsigned threads) {
    require_sorted(spec_sorted);
    const std::size_t n = spec_sorted.size();
    if (n < 3) throw DomainError("grid optimisation requires at least 3 terms");

    std::vector<std::size_t> counts;
    for (double f : grid.active_fractions) {
        if (!(f >= 0.0 && f <= 1.0)) throw DomainError("active fraction outside [0, 1]");
        counts.push_back(static_cast<std::size_t>(std::llround(f * static_cast<double>(n))));
    }
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());

    std::vector<double> mu_primes = grid.mu_primes;
    for (double m : mu_primes) {
        if (!(m > 0.0 && m <= 1.0)) throw DomainError("mu' outside (0, 1]");
    }
    std::sort(mu_primes.begin(), mu_primes.end());
    mu_primes.erase(std::unique(mu_primes.begin(), mu_primes.end()), mu_primes.end());
    if (counts.empty() || mu_primes.empty()) throw DomainError("empty optimisation grid");

    OptimizationReport report;
    for (std::size_t a : counts) {
        if (a == n) {
            report.grid.push_back({{kind, a, 1.0}, 1.0, false, std::nullopt});
            continue;
        }
        for (double m : mu_primes) {
            report.grid.push_back(
                {{kind, a, m}, static_cast<double>(a) / static_cast<double>(n), false, std::nullopt});
        }
    }

    const Eigen::ArrayXd h = spec_sorted.magnitudes();
    auto build = [&](const AnsatzConfig& config) {
        if (config.kind == AnsatzKind::uniform) {
            return uniform_ansatz_probs(spec_sorted, config.active_count, config.mu_prime);
        }
        const double a = static_cast<double>(config.active_count);
        return linear_ansatz_probs(spec_sorted, config.active_count,
                                   a + config.mu_prime * (static_cast<double>(n) - a));
    };

    parallel_for(report.grid.size(), threads, [&](std::size_t i) {
        GridRecord& record = report.grid[i];
        try {
            const ProbabilityAssignment assignment = build(record.config);
            record.bound = theorem2_bound(h, assignment.p, t, gates);
            record.feasible = true;
        } catch (const InfeasibleError&) {
            record.feasible = false;
        }
    });

    const GridRecord* best = nullptr;
    for (const auto& record : report.grid) {
        // Later records have larger |A| or equal |A| and larger mu', so `<=`
        // resolves ties toward denser assignments.
        if (record.feasible && (best == nullptr || record.bound->total <= best->bound->total)) {
            best = &record;
        }
    }
    if (best == nullptr) throw DomainError("every grid point is infeasible for the linear ansatz");

    report.best_config = best->config;
    report.best_assignment = build(best->config);
    report.best_bound = *best->bound;
    return report;
}

std::string grid_csv(const OptimizationReport& report) {
    std::ostringstream out;
    out << "active_fraction,mu_prime,feasible,eps1,eps2,eps31,eps32,total\n";
    for (const auto& r : report.grid) {
        out << format_double(r.active_fraction) << ',' << format_double(r.config.mu_prime) << ','
            << (r.feasible ? "true" : "false");
        if (r.bound) {
            out << ',' << format_double(r.bound->eps1) << ',' << format_double(r.bound->eps2) << ','
                << format_double(r.bound->eps31) << ',' << format_double(r.bound->eps32) << ','
                << format_double(r.bound->total);
        } else {
            out << ",,,,,";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace sparsto
