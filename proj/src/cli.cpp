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

#include "sparsto/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "sparsto/ansatz.hpp"
#include "sparsto/bounds.hpp"
#include "sparsto/channel.hpp"
#include "sparsto/errors.hpp"
#include "sparsto/hamiltonian.hpp"
#include "sparsto/report_json.hpp"
#include "sparsto/schedule.hpp"
#include "sparsto/sweep.hpp"

namespace sparsto {

namespace {

struct Options {
    std::string hamiltonian;
    std::string probabilities;
    std::string output;
    double time = 0.0;
    double gates = 0.0;
    double gates_min = 0.0;
    double gates_max = 0.0;
    std::size_t points = 25;
    bool log = false;
    std::string method = "sparsto";
    std::string bound = "theorem2";
    std::string ansatz = "linear";
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    bool exact = false;
    std::string csv;
    std::string write_probabilities;
    std::size_t terms = 0;
    double exponent = 2.0;
    std::size_t qubits = 0;
};

// Spec in the term order the probabilities refer to, plus the assignment.
struct Allocation {
    HamiltonianSpec spec;
    ProbabilityAssignment assignment;
    std::optional<OptimizationReport> report;
};

void write_text(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw FormatError("cannot open " + path + " for writing");
    file << text;
    if (!file) throw FormatError("failed writing " + path);
}

class Runner {
public:
    Runner(const Options& options, std::ostream& out, std::ostream& err)
        : o_(options), out_(out), err_(err) {}

    void bounds() {
        const HamiltonianSpec spec = load_spec();
        BoundBreakdown result;
        if (o_.method == "qdrift") {
            result = qdrift_bound(spec, o_.time, o_.gates);
        } else if (o_.method == "trotter1") {
            result = trotter1_bound(spec, o_.time, o_.gates);
        } else if (o_.method == "r1otrott") {
            result = corollary_p1_bound(spec, o_.time, o_.gates);
        } else {
            const Allocation a = allocate(spec);
            if (o_.bound == "theorem1") {
                result = theorem1_bound(a.spec, a.assignment, o_.time, o_.gates);
            } else if (o_.bound == "commutator") {
                result = commutator_refined_bound(a.spec, a.assignment, o_.time, o_.gates);
            } else {
                result = theorem2_bound(a.spec, a.assignment, o_.time, o_.gates);
            }
        }
        emit(to_json(result).dump(2) + "\n");
    }

    void optimize() {
        const HamiltonianSpec sorted = sort_terms_desc(load_spec());
        const OptimizationReport report =
            grid_optimize(sorted, o_.time, o_.gates, ansatz_kind(), AnsatzGrid::standard(), 0);
        if (!o_.csv.empty()) write_text(o_.csv, grid_csv(report));
        if (!o_.write_probabilities.empty()) {
            write_text(o_.write_probabilities,
                       serialize_probabilities({TermOrder::sorted_desc, report.best_assignment}));
        }
        emit(to_json(report).dump(2) + "\n");
    }

    void sweep() {
        const HamiltonianSpec spec = load_spec();
        const std::vector<double> grid = gate_grid(o_.gates_min, o_.gates_max, o_.points, o_.log);
        emit(sweep_csv(run_sweep(spec, o_.time, grid, 0)));
    }

    void compile() {
        const HamiltonianSpec spec = load_spec();
        GateSchedule schedule;
        if (o_.method == "qdrift") {
            schedule = compile_qdrift(spec, o_.time, o_.gates, o_.seed);
        } else if (o_.method == "trotter1") {
            const double n = static_cast<double>(spec.size());
            const double r = std::max(1.0, std::floor(o_.gates / n));
            schedule = compile_trotter1(spec, o_.time, static_cast<std::size_t>(r));
        } else if (o_.method == "r1otrott") {
            schedule = compile_sparsto(spec, all_ones_assignment(spec.size()), o_.time, o_.gates,
                                       o_.seed);
            schedule.method = "r1otrott";
        } else {
            const Allocation a = allocate(spec);
            schedule = compile_sparsto(a.spec, a.assignment, o_.time, o_.gates, o_.seed);
        }
        emit(serialize_schedule(schedule));
    }

    void simulate() {
        const HamiltonianSpec spec = load_spec();
        Allocation a = o_.method == "r1otrott"
                           ? Allocation{spec, all_ones_assignment(spec.size()), std::nullopt}
                           : allocate(spec);
        const SimulationMode mode = o_.exact ? SimulationMode::exact : SimulationMode::monte_carlo;
        const ChannelErrorReport report =
            empirical_error(a.spec, a.assignment, o_.time, o_.gates, mode, o_.samples, o_.seed);
        emit(to_json(report).dump(2) + "\n");
    }

    void synth() {
        if (o_.terms == 0) throw DomainError("--terms must be positive");
        std::size_t qubits = o_.qubits;
        if (qubits == 0) {
            // Smallest register with room for the requested labels.
            qubits = 1;
            while (qubits < 31 && (std::size_t{1} << (2 * qubits)) - 1 < o_.terms) ++qubits;
        }
        emit(serialize_hamiltonian(synth_power_law(o_.terms, o_.exponent, qubits, o_.seed)));
    }

private:
    HamiltonianSpec load_spec() {
        ParsedHamiltonian parsed = read_hamiltonian_file(o_.hamiltonian);
        for (const std::string& w : parsed.warnings) err_ << "warning: " << w << '\n';
        return std::move(parsed.spec);
    }

    AnsatzKind ansatz_kind() const {
        return o_.ansatz == "uniform" ? AnsatzKind::uniform : AnsatzKind::linear;
    }

    Allocation allocate(const HamiltonianSpec& spec) {
        if (!o_.probabilities.empty()) {
            ProbabilityFile file = read_probabilities_file(o_.probabilities);
            HamiltonianSpec aligned =
                file.order == TermOrder::sorted_desc ? sort_terms_desc(spec) : spec;
            validate_assignment(aligned, file.assignment);
            return {std::move(aligned), std::move(file.assignment), std::nullopt};
        }
        HamiltonianSpec sorted = sort_terms_desc(spec);
        OptimizationReport report =
            grid_optimize(sorted, o_.time, o_.gates, ansatz_kind(), AnsatzGrid::standard(), 0);
        ProbabilityAssignment best = report.best_assignment;
        return {std::move(sorted), std::move(best), std::move(report)};
    }

    void emit(const std::string& text) {
        if (o_.output.empty()) {
            out_ << text;
        } else {
            write_text(o_.output, text);
        }
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
};

const std::vector<std::string> kMethods = {"sparsto", "qdrift", "trotter1", "r1otrott"};

CLI::Option* add_hamiltonian(CLI::App* cmd, Options& o) {
    return cmd->add_option("--hamiltonian", o.hamiltonian, "hamiltonian-terms-v1 file")->required();
}

void add_time_gates(CLI::App* cmd, Options& o) {
    cmd->add_option("--time", o.time, "evolution time t")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--gates", o.gates, "expected gate count G")->required()->check(CLI::PositiveNumber);
}

void add_allocation(CLI::App* cmd, Options& o) {
    cmd->add_option("--probabilities", o.probabilities, "probabilities-v1 file");
    cmd->add_option("--ansatz", o.ansatz, "ansatz to optimise when no probabilities are given")
        ->check(CLI::IsMember({"linear", "uniform"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Error bounds, compilation and simulation for sparsified randomized Trotter"};
    app.name("sparsto");
    app.require_subcommand(1, 1);

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate an error bound");
    add_hamiltonian(bounds, o);
    add_time_gates(bounds, o);
    bounds->add_option("--method", o.method)->check(CLI::IsMember(kMethods));
    bounds->add_option("--bound", o.bound, "bound used for --method sparsto")
        ->check(CLI::IsMember({"theorem2", "theorem1", "commutator"}));
    add_allocation(bounds, o);

    CLI::App* optimize = app.add_subcommand("optimize", "grid search over the ansatz family");
    add_hamiltonian(optimize, o);
    add_time_gates(optimize, o);
    optimize->add_option("--ansatz", o.ansatz)->check(CLI::IsMember({"linear", "uniform"}));
    optimize->add_option("--csv", o.csv, "write every grid point to this CSV file");
    optimize->add_option("--write-probabilities", o.write_probabilities,
                         "write the best assignment as a probabilities-v1 file");

    CLI::App* sweep = app.add_subcommand("sweep", "compare methods over a range of G");
    add_hamiltonian(sweep, o);
    sweep->add_option("--time", o.time)->required()->check(CLI::PositiveNumber);
    sweep->add_option("--gates-min", o.gates_min)->required()->check(CLI::PositiveNumber);
    sweep->add_option("--gates-max", o.gates_max)->required()->check(CLI::PositiveNumber);
    sweep->add_option("--points", o.points)->check(CLI::PositiveNumber);
    sweep->add_flag("--log", o.log, "space G logarithmically");

    CLI::App* compile = app.add_subcommand("compile", "emit a gate schedule");
    add_hamiltonian(compile, o);
    add_time_gates(compile, o);
    compile->add_option("--method", o.method)->check(CLI::IsMember(kMethods));
    compile->add_option("--seed", o.seed);
    add_allocation(compile, o);

    CLI::App* simulate = app.add_subcommand("simulate", "measure the channel error of a small instance");
    add_hamiltonian(simulate, o);
    add_time_gates(simulate, o);
    simulate->add_option("--method", o.method)->check(CLI::IsMember({"sparsto", "r1otrott"}));
    simulate->add_option("--seed", o.seed);
    simulate->add_option("--samples", o.samples, "Monte Carlo samples per step");
    simulate->add_flag("--exact-enumeration", o.exact, "sum over all keep/drop outcomes");
    add_allocation(simulate, o);

    CLI::App* synth = app.add_subcommand("synth", "generate a power-law Hamiltonian");
    synth->add_option("--terms", o.terms)->required()->check(CLI::PositiveNumber);
    synth->add_option("--exponent", o.exponent);
    synth->add_option("--qubits", o.qubits, "register size (default: smallest that fits)");
    synth->add_option("--seed", o.seed);

    for (CLI::App* cmd : {bounds, optimize, sweep, compile, simulate, synth}) {
        cmd->add_option("--output", o.output, "output file (default: standard output)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    }

    Runner runner(o, out, err);
    try {
        if (bounds->parsed()) runner.bounds();
        if (optimize->parsed()) runner.optimize();
        if (sweep->parsed()) runner.sweep();
        if (compile->parsed()) runner.compile();
        if (simulate->parsed()) runner.simulate();
        if (synth->parsed()) runner.synth();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace sparsto
