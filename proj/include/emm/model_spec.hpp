#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "emm/errors.hpp"

namespace emm {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

enum class Group { SU2, SU3 };
enum class Scenario { Vacuum, Thermal, Density };
enum class ThermalForm { DoubleSum, HighT };
enum class DensityDomain { Mod2Pi, Raw };

inline std::string to_string(Group g) {
    return g == Group::SU2 ? "su2" : "su3";
}
inline std::string to_string(Scenario s) {
    switch (s) {
        case Scenario::Vacuum: return "vacuum";
        case Scenario::Thermal: return "thermal";
        default: return "density";
    }
}
inline std::string to_string(ThermalForm f) {
    return f == ThermalForm::DoubleSum ? "double_sum" : "high_t";
}
inline std::string to_string(DensityDomain d) {
    return d == DensityDomain::Mod2Pi ? "mod_2pi" : "raw";
}

/// Physical and series-control parameters selecting which effective
/// potential is built. Immutable after validation; safe to share.
struct ModelSpec {
    Group group = Group::SU2;
    Scenario scenario = Scenario::Vacuum;

    int n_f = 1;          ///< fermion flavors (fundamental representation)
    double L = 1.0;       ///< compactification circle size
    double V = 1.0;       ///< spatial volume factor
    std::optional<double> beta;  ///< inverse temperature (thermal scenario)
    std::optional<double> mu;    ///< chemical potential (density scenario)

    int lmax = 1000;      ///< cosine-series cutoff
    int m_cutoff = 200;   ///< thermal double-sum cutoff: m in [-m_cutoff, m_cutoff]

    ThermalForm thermal_form = ThermalForm::DoubleSum;
    bool include_m_zero = false;
    bool include_constant_terms = false;
    DensityDomain density_domain = DensityDomain::Mod2Pi;

    /// Sign of the SU(3) fermion potential term; -1 matches the series as
    /// published, +1 flips it (both carried through calibration; see
    /// docs/calibration.md).
    int su3_fermion_sign = -1;

    void validate() const {
        if (n_f < 0) throw ConfigError("ModelSpec: n_f must be >= 0");
        if (!(L > 0.0)) throw ConfigError("ModelSpec: L must be positive");
        if (!(V > 0.0)) throw ConfigError("ModelSpec: V must be positive");
        if (lmax < 1) throw ConfigError("ModelSpec: lmax must be >= 1");
        if (m_cutoff < 1) throw ConfigError("ModelSpec: m_cutoff must be >= 1");
        if (su3_fermion_sign != 1 && su3_fermion_sign != -1) {
            throw ConfigError("ModelSpec: su3_fermion_sign must be +1 or -1");
        }
        if (scenario == Scenario::Thermal) {
            if (!beta.has_value()) {
                throw ConfigError("ModelSpec: thermal scenario requires beta");
            }
            if (!(*beta > 0.0)) {
                throw ConfigError("ModelSpec: beta must be positive");
            }
        }
        if (scenario == Scenario::Density) {
            if (!mu.has_value()) {
                throw ConfigError("ModelSpec: density scenario requires mu");
            }
            if (*mu < 0.0) {
                throw ConfigError("ModelSpec: mu must be non-negative");
            }
            if (*mu * L > kPi) {
                throw ConfigError(
                    "ModelSpec: mu*L must be <= pi so the three density "
                    "branches are well-ordered (got mu*L = " +
                    std::to_string(*mu * L) + ")");
            }
        }
        if (group == Group::SU3 && scenario != Scenario::Vacuum) {
            throw ConfigError(
                "ModelSpec: SU(3) is only defined for the vacuum scenario");
        }
    }
};

} // namespace emm
