// Command-line frontend: effective matrix-model Hamiltonians, exact ground
// energies, Pauli decompositions, and VQE runs.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "emm/emm.hpp"

namespace {

struct CliOptions {
    std::string group = "su2";
    std::string scenario = "vacuum";
    int n_f = 1;
    double L = 1.0;
    double V = 1.0;
    double beta = 1.0;
    double mu = emm::kPi / 2.0;
    int levels = 16;
    int lmax = 1000;
    int m_cutoff = 200;
    std::string thermal_form = "double_sum";
    bool include_m_zero = false;
    bool include_constants = false;
    std::string density_domain = "mod_2pi";
    int depth = 3;
    std::string entanglement = "full";
    int restarts = 10;
    std::uint64_t seed = 7;
    double threshold = emm::kDefaultPauliThreshold;
    std::string out;
    std::string trace_path;
    double phi_min = 0.0;
    double phi_max = std::nan("");
    double phi_step = std::nan("");
};

emm::ModelSpec make_spec(const CliOptions& o) {
    emm::ModelSpec spec;
    spec.group = (o.group == "su3") ? emm::Group::SU3 : emm::Group::SU2;
    if (o.scenario == "thermal") spec.scenario = emm::Scenario::Thermal;
    else if (o.scenario == "density") spec.scenario = emm::Scenario::Density;
    else spec.scenario = emm::Scenario::Vacuum;
    spec.n_f = o.n_f;
    spec.L = o.L;
    spec.V = o.V;
    if (spec.scenario == emm::Scenario::Thermal) spec.beta = o.beta;
    if (spec.scenario == emm::Scenario::Density) spec.mu = o.mu;
    spec.lmax = o.lmax;
    spec.m_cutoff = o.m_cutoff;
    spec.thermal_form = (o.thermal_form == "high_t") ? emm::ThermalForm::HighT
                                                     : emm::ThermalForm::DoubleSum;
    spec.include_m_zero = o.include_m_zero;
    spec.include_constant_terms = o.include_constants;
    spec.density_domain = (o.density_domain == "raw")
                              ? emm::DensityDomain::Raw
                              : emm::DensityDomain::Mod2Pi;
    spec.validate();
    return spec;
}

void add_model_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--group", o.group, "Gauge group")
        ->check(CLI::IsMember({"su2", "su3"}))
        ->capture_default_str();
    cmd->add_option("--scenario", o.scenario, "Physical scenario")
        ->check(CLI::IsMember({"vacuum", "thermal", "density"}))
        ->capture_default_str();
    cmd->add_option("--nf", o.n_f, "Fermion flavors")->capture_default_str();
    cmd->add_option("--L", o.L, "Circle size")->capture_default_str();
    cmd->add_option("--V", o.V, "Volume factor")->capture_default_str();
    cmd->add_option("--beta", o.beta, "Inverse temperature (thermal)")
        ->capture_default_str();
    cmd->add_option("--mu", o.mu, "Chemical potential (density)")
        ->capture_default_str();
    cmd->add_option("--levels", o.levels, "Oscillator basis levels")
        ->capture_default_str();
    cmd->add_option("--lmax", o.lmax, "Cosine series cutoff")
        ->capture_default_str();
    cmd->add_option("--mcut", o.m_cutoff, "Thermal m-sum cutoff")
        ->capture_default_str();
    cmd->add_option("--thermal-form", o.thermal_form, "Thermal potential form")
        ->check(CLI::IsMember({"double_sum", "high_t"}))
        ->capture_default_str();
    cmd->add_flag("--include-m-zero", o.include_m_zero,
                  "Keep the m=0 term of the thermal double sum");
    cmd->add_flag("--include-constants", o.include_constants,
                  "Keep the constant terms of the high-T form");
    cmd->add_option("--density-domain", o.density_domain,
                    "Argument handling for the density potential")
        ->check(CLI::IsMember({"mod_2pi", "raw"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "Output file path");
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw emm::ConfigError("cannot open output file: " + path);
    return file;
}

int cmd_potential(const CliOptions& o) {
    const emm::ModelSpec spec = make_spec(o);
    const bool su3 = spec.group == emm::Group::SU3;
    const double max =
        std::isnan(o.phi_max) ? (su3 ? 2.0 * emm::kPi : 4.0 * emm::kPi) : o.phi_max;
    const double step =
        std::isnan(o.phi_step) ? (su3 ? emm::kPi / 50.0 : emm::kPi / 100.0)
                               : o.phi_step;
    const double min = o.phi_min;
    if (!(step > 0.0)) throw emm::ConfigError("potential: step must be positive");
    if (!(max >= min)) throw emm::ConfigError("potential: range must satisfy max >= min");
    const auto n_steps = static_cast<long>(std::llround((max - min) / step));

    std::ofstream file;
    std::ostream& out = open_out(file, o.out);
    if (su3) {
        out << "phi1,phi2,V\n";
        for (long i = 0; i <= n_steps; ++i) {
            const double p1 = min + static_cast<double>(i) * step;
            for (long j = 0; j <= n_steps; ++j) {
                const double p2 = min + static_cast<double>(j) * step;
                out << emm::format_double(p1) << ',' << emm::format_double(p2)
                    << ',' << emm::format_double(emm::su3_vacuum(p1, p2, spec))
                    << '\n';
            }
        }
    } else {
        out << "phi,V\n";
        for (long i = 0; i <= n_steps; ++i) {
            const double p = min + static_cast<double>(i) * step;
            out << emm::format_double(p) << ','
                << emm::format_double(emm::su2_potential(p, spec)) << '\n';
        }
    }
    return emm::kExitOk;
}

int cmd_exact(const CliOptions& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const emm::ModelSpec spec = make_spec(o);
    emm::TruncationConfig trunc{o.levels};
    const emm::ModelHamiltonian h = emm::build_hamiltonian(spec, trunc);
    const emm::GroundState g = emm::ground_state(h);

    std::cout << "exact_energy = " << emm::format_double(g.energy) << '\n'
              << "n_qubits = " << h.n_qubits << '\n';

    if (!o.out.empty()) {
        emm::RunRecord rec;
        rec.spec = spec;
        rec.levels = o.levels;
        rec.n_qubits = h.n_qubits;
        rec.exact_energy = g.energy;
        rec.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::ofstream file(o.out);
        if (!file) throw emm::ConfigError("cannot open output file: " + o.out);
        rec.write_json(file);
    }
    return emm::kExitOk;
}

int cmd_paulis(const CliOptions& o) {
    const emm::ModelSpec spec = make_spec(o);
    emm::TruncationConfig trunc{o.levels};
    const emm::ModelHamiltonian h = emm::build_hamiltonian(spec, trunc);
    const emm::PauliSum sum = emm::decompose(h.op, o.threshold);

    if (o.out.empty()) {
        std::cout << emm::serialize(sum);
    } else {
        std::ofstream file(o.out);
        if (!file) throw emm::ConfigError("cannot open output file: " + o.out);
        file << emm::serialize(sum);
    }
    std::cout << "pauli_terms = " << sum.size() << '\n';
    return emm::kExitOk;
}

int cmd_vqe(const CliOptions& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const emm::ModelSpec spec = make_spec(o);
    emm::TruncationConfig trunc{o.levels};
    const emm::ModelHamiltonian h = emm::build_hamiltonian(spec, trunc);
    const emm::GroundState g = emm::ground_state(h);
    const emm::PauliSum sum = emm::decompose(h.op, o.threshold);

    emm::AnsatzSpec ansatz;
    ansatz.n_qubits = h.n_qubits;
    ansatz.depth = o.depth;
    ansatz.entanglement = (o.entanglement == "linear") ? emm::Entanglement::Linear
                                                       : emm::Entanglement::Full;
    const emm::VqeResult vqe =
        emm::run_vqe(h, ansatz, o.restarts, o.seed, 600, g.energy);

    std::cout << "exact_energy = " << emm::format_double(g.energy) << '\n'
              << "vqe_energy = " << emm::format_double(vqe.best_energy) << '\n'
              << "vqe_gap = " << emm::format_double(vqe.best_energy - g.energy)
              << '\n'
              << "n_qubits = " << h.n_qubits << '\n'
              << "pauli_terms = " << sum.size() << '\n'
              << "evaluations = " << vqe.trace.size() << '\n';

    if (!o.trace_path.empty()) {
        std::ofstream file(o.trace_path);
        if (!file) {
            throw emm::ConfigError("cannot open trace file: " + o.trace_path);
        }
        emm::write_trace_csv(file, vqe.trace);
    }
    if (!o.out.empty()) {
        emm::RunRecord rec;
        rec.spec = spec;
        rec.levels = o.levels;
        rec.n_qubits = h.n_qubits;
        rec.pauli_term_count = static_cast<std::int64_t>(sum.size());
        rec.exact_energy = g.energy;
        rec.vqe_energy = vqe.best_energy;
        rec.vqe_gap = vqe.best_energy - g.energy;
        rec.restarts = o.restarts;
        rec.seed = o.seed;
        rec.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::ofstream file(o.out);
        if (!file) throw emm::ConfigError("cannot open output file: " + o.out);
        rec.write_json(file);
    }
    return emm::kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Effective matrix-model Hamiltonians: construction, exact "
        "diagonalization, Pauli decomposition, and VQE"};
    app.require_subcommand(1);

    CliOptions o;

    CLI::App* pot = app.add_subcommand(
        "potential", "Write effective-potential curve/grid data as CSV");
    add_model_flags(pot, o);
    pot->add_option("--phi-min", o.phi_min, "Grid start")->capture_default_str();
    pot->add_option("--phi-max", o.phi_max,
                    "Grid end (default: 4*pi for su2, 2*pi for su3)");
    pot->add_option("--phi-step", o.phi_step,
                    "Grid step (default: pi/100 for su2, pi/50 for su3)");

    CLI::App* exact = app.add_subcommand(
        "exact", "Exact ground energy by dense diagonalization");
    add_model_flags(exact, o);

    CLI::App* paulis = app.add_subcommand(
        "paulis", "Pauli-string decomposition of the Hamiltonian");
    add_model_flags(paulis, o);
    paulis->add_option("--threshold", o.threshold, "Coefficient zero threshold")
        ->capture_default_str();

    CLI::App* vqe = app.add_subcommand("vqe", "Variational ground-state search");
    add_model_flags(vqe, o);
    vqe->add_option("--threshold", o.threshold, "Coefficient zero threshold")
        ->capture_default_str();
    vqe->add_option("--depth", o.depth, "Ansatz depth")->capture_default_str();
    vqe->add_option("--entanglement", o.entanglement, "Entangler layout")
        ->check(CLI::IsMember({"full", "linear"}))
        ->capture_default_str();
    vqe->add_option("--restarts", o.restarts, "Independent optimizer starts")
        ->capture_default_str();
    vqe->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    vqe->add_option("--trace", o.trace_path, "Convergence trace CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help et al.
        app.exit(e);
        return emm::kExitConfigError;
    }

    try {
        if (pot->parsed()) return cmd_potential(o);
        if (exact->parsed()) return cmd_exact(o);
        if (paulis->parsed()) return cmd_paulis(o);
        if (vqe->parsed()) return cmd_vqe(o);
        throw emm::ConfigError("no subcommand selected");
    } catch (const emm::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return emm::kExitConfigError;
    } catch (const emm::ContractError& e) {
        std::cerr << "contract violation: " << e.what() << '\n';
        return emm::kExitContractError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return emm::kExitContractError;
    }
}
