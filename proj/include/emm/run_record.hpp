#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "emm/model_spec.hpp"
#include "emm/oscillator.hpp"

namespace emm {

/// Structured result of a CLI run: the full configuration echo plus the
/// computed quantities. All fields except wall_time_seconds are
/// deterministic for fixed flags and seed.
struct RunRecord {
    ModelSpec spec;
    int levels = 16;
    int n_qubits = 0;
    std::optional<std::int64_t> pauli_term_count;
    std::optional<double> exact_energy;
    std::optional<double> vqe_energy;
    std::optional<double> vqe_gap;  ///< vqe_energy - exact_energy
    std::optional<int> restarts;
    std::optional<std::uint64_t> seed;
    double wall_time_seconds = 0.0;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["group"] = to_string(spec.group);
        j["scenario"] = to_string(spec.scenario);
        j["n_f"] = spec.n_f;
        j["L"] = spec.L;
        j["V"] = spec.V;
        if (spec.beta.has_value()) j["beta"] = *spec.beta; else j["beta"] = nullptr;
        if (spec.mu.has_value()) j["mu"] = *spec.mu; else j["mu"] = nullptr;
        j["lmax"] = spec.lmax;
        j["m_cutoff"] = spec.m_cutoff;
        j["thermal_form"] = to_string(spec.thermal_form);
        j["include_m_zero"] = spec.include_m_zero;
        j["include_constant_terms"] = spec.include_constant_terms;
        j["density_domain"] = to_string(spec.density_domain);
        j["su3_fermion_sign"] = spec.su3_fermion_sign;
        j["levels"] = levels;
        j["n_qubits"] = n_qubits;
        if (pauli_term_count) j["pauli_term_count"] = *pauli_term_count;
        else j["pauli_term_count"] = nullptr;
        if (exact_energy) j["exact_energy"] = *exact_energy;
        else j["exact_energy"] = nullptr;
        if (vqe_energy) j["vqe_energy"] = *vqe_energy; else j["vqe_energy"] = nullptr;
        if (vqe_gap) j["vqe_gap"] = *vqe_gap; else j["vqe_gap"] = nullptr;
        if (restarts) j["restarts"] = *restarts; else j["restarts"] = nullptr;
        if (seed) j["seed"] = *seed; else j["seed"] = nullptr;
        j["wall_time_seconds"] = wall_time_seconds;
        return j;
    }

    void write_json(std::ostream& out) const { out << to_json().dump(2) << '\n'; }
};

} // namespace emm
