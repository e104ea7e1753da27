#pragma once

#include <cmath>
#include <string>

#include "emm/errors.hpp"
#include "emm/model_spec.hpp"

namespace emm {

/// Certified absolute truncation error for a tail sum_{l>cutoff} l^(-power),
/// per unit cosine amplitude: integral bound cutoff^(1-power)/(power-1).
inline double series_tail_bound(int cutoff, int power) {
    if (cutoff < 1) throw ConfigError("series_tail_bound: cutoff must be >= 1");
    if (power < 2) throw ConfigError("series_tail_bound: power must be >= 2");
    return std::pow(static_cast<double>(cutoff), 1 - power) / (power - 1);
}

/// Truncation-error certificate attached to a series-evaluated potential.
struct SeriesTail {
    int cutoff = 0;
    double tail_bound = 0.0;  ///< guaranteed absolute error of the truncation
};

namespace detail {

/// Gauge + fermion vacuum series, free of scenario checks so the thermal
/// potential can reuse it.
inline double su2_vacuum_core(double phi, int n_f, double L, int lmax) {
    const double l4 = L * L * L * L;
    double gauge = 0.0;
    double fermion = 0.0;
    for (int l = 1; l <= lmax; ++l) {
        const double il4 = 1.0 / (static_cast<double>(l) * l * l * l);
        gauge += (2.0 * std::cos(l * phi) + 1.0) * il4;
        fermion += 2.0 * std::cos(l * phi / 2.0) * il4;
    }
    return -(2.0 / (l4 * kPi * kPi)) * gauge +
           n_f * (4.0 / (l4 * kPi * kPi)) * fermion;
}

/// Finite-temperature correction: two-sided m sum over the thermally
/// softened propagator denominators. The fermion term carries the printed
/// 1/L^4 prefactor even though the gauge term does not.
inline double su2_thermal_correction_core(double phi, int n_f, double L,
                                          double beta, int lmax, int m_cutoff,
                                          bool include_m_zero) {
    const double l4 = L * L * L * L;
    double out = 0.0;
    for (int m = -m_cutoff; m <= m_cutoff; ++m) {
        if (m == 0 && !include_m_zero) continue;
        const double bm2 = beta * beta * static_cast<double>(m) * m;
        const double fsign = (m % 2 == 0) ? 1.0 : -1.0;
        double gauge = 0.0;
        double fermion = 0.0;
        for (int l = 1; l <= lmax; ++l) {
            const double den = L * L * static_cast<double>(l) * l + bm2;
            const double w = 1.0 / (den * den);
            gauge += std::cos(2.0 * l * phi) * w;
            fermion += fsign * std::cos(l * phi) * w;
        }
        out += -(2.0 / (kPi * kPi)) * gauge +
               n_f * (4.0 / (l4 * kPi * kPi)) * fermion;
    }
    return out;
}

/// Apery's constant zeta(3); appears as a closed symbol in the
/// high-temperature constant terms, so it is not truncated with the series.
inline constexpr double kZeta3 = 1.2020569031595942854;

/// Small-beta (high temperature) closed approximation. The phi-dependent
/// piece is an l^-3 cosine series; the Stefan-Boltzmann beta^-4 constant and
/// the zeta(3) constant ride behind include_constant_terms.
inline double su2_high_t_core(double phi, int n_f, double L, double V,
                              double beta, int lmax, bool constants) {
    double series = 0.0;
    for (int l = 1; l <= lmax; ++l) {
        const double il3 = 1.0 / (static_cast<double>(l) * l * l);
        series += std::cos(2.0 * l * phi) * il3;
    }
    const double pref = (2.0 * V / (L * L * L)) * (L / beta);
    double out = -pref * 2.0 * series;
    if (constants) {
        out -= pref * kZeta3;
        out -= V * L * (kPi * kPi / 90.0) * (2.0 * 3.0 + (7.0 / 8.0) * 4.0 * n_f) /
               (beta * beta * beta * beta);
    }
    return out;
}

inline double density_common(double r) {
    const double s = r - kPi;
    return (1.0 / 6.0) *
           (2.0 * kPi * kPi * s * s - s * s * s * s - (7.0 / 15.0) * kPi * kPi * kPi * kPi);
}

inline double density_branch1(double r, double mu_l) {
    const double s = r - mu_l;
    return -(kPi / 3.0) * s * s * (2.0 * r + mu_l);
}

inline double density_branch3(double r, double mu_l) {
    const double s = 2.0 * kPi - r - mu_l;
    return -(kPi / 3.0) * s * s * (4.0 * kPi - 2.0 * r + mu_l);
}

/// Piecewise finite-density fermion potential. The branch conditions are
/// stated on (0, 2pi]; arguments outside that interval (possible with
/// density_domain=raw) fall into the nearest branch's polynomial
/// continuation: branch 1 on the left, branch 3 on the right.
inline double su2_density_core(double phi, int n_f, double L, double V,
                               double mu, DensityDomain domain) {
    const double mu_l = mu * L;
    double r = phi;
    if (domain == DensityDomain::Mod2Pi) {
        r = std::fmod(phi, 2.0 * kPi);
        if (r < 0.0) r += 2.0 * kPi;
    }
    double bracket = density_common(r);
    if (r <= mu_l) {
        bracket += density_branch1(r, mu_l);
    } else if (r > 2.0 * kPi - mu_l) {
        bracket += density_branch3(r, mu_l);
    }
    const double l4 = L * L * L * L;
    return n_f * V * L / (l4 * kPi * kPi) * bracket;
}

inline double su3_vacuum_core(double phi1, double phi2, double L, int lmax,
                              int fermion_sign) {
    double z4 = 0.0;
    for (int m = 1; m <= lmax; ++m) {
        z4 += 1.0 / (static_cast<double>(m) * m * m * m);
    }
    const double phi3 = -phi1 - phi2;
    const double gauge_sum =
        3.0 + 2.0 * std::cos(phi1 - phi2) + 2.0 * std::cos(phi1 - phi3) +
        2.0 * std::cos(phi2 - phi3);
    const double fermion_sum =
        std::cos(phi1) + std::cos(phi2) + std::cos(phi3);
    const double l4 = L * L * L * L;
    const double c = 2.0 / (kPi * kPi * l4) * z4;
    return -c * gauge_sum + fermion_sign * c * fermion_sum;
}

} // namespace detail

/// One-loop SU(2) vacuum potential: gauge l^-4 cosine series plus the
/// fundamental-fermion series at half argument. 4pi-periodic.
inline double su2_vacuum(double phi, const ModelSpec& spec) {
    spec.validate();
    if (spec.group != Group::SU2 || spec.scenario != Scenario::Vacuum) {
        throw ConfigError("su2_vacuum: spec must be SU(2) vacuum");
    }
    return detail::su2_vacuum_core(phi, spec.n_f, spec.L, spec.lmax);
}

/// Finite-temperature SU(2) potential in the selected form.
inline double su2_thermal(double phi, const ModelSpec& spec) {
    spec.validate();
    if (spec.group != Group::SU2 || spec.scenario != Scenario::Thermal) {
        throw ConfigError("su2_thermal: spec must be SU(2) thermal");
    }
    const double beta = *spec.beta;
    if (spec.thermal_form == ThermalForm::DoubleSum) {
        return detail::su2_vacuum_core(phi, spec.n_f, spec.L, spec.lmax) +
               detail::su2_thermal_correction_core(phi, spec.n_f, spec.L, beta,
                                                   spec.lmax, spec.m_cutoff,
                                                   spec.include_m_zero);
    }
    return detail::su2_high_t_core(phi, spec.n_f, spec.L, spec.V, beta,
                                   spec.lmax, spec.include_constant_terms);
}

/// Zero-temperature finite-density SU(2) fermion potential (three-branch
/// piecewise polynomial; see density_domain for the treatment of arguments
/// outside (0, 2pi]).
inline double su2_density(double phi, const ModelSpec& spec) {
    spec.validate();
    if (spec.group != Group::SU2 || spec.scenario != Scenario::Density) {
        throw ConfigError("su2_density: spec must be SU(2) density");
    }
    return detail::su2_density_core(phi, spec.n_f, spec.L, spec.V, *spec.mu,
                                    spec.density_domain);
}

/// SU(3) vacuum potential over the two Wilson-line angles, with
/// phi3 = -phi1 - phi2. The summation-index weight factors out of the
/// cosines exactly as published.
inline double su3_vacuum(double phi1, double phi2, const ModelSpec& spec) {
    spec.validate();
    if (spec.group != Group::SU3) {
        throw ConfigError("su3_vacuum: spec must be SU(3)");
    }
    return detail::su3_vacuum_core(phi1, phi2, spec.L, spec.lmax,
                                   spec.su3_fermion_sign);
}

/// Scenario dispatch for the SU(2) scalar potential.
inline double su2_potential(double phi, const ModelSpec& spec) {
    switch (spec.scenario) {
        case Scenario::Vacuum: return su2_vacuum(phi, spec);
        case Scenario::Thermal: return su2_thermal(phi, spec);
        default: return su2_density(phi, spec);
    }
}

/// Conservative truncation-error certificate for the series entering the
/// potential selected by `spec` (summed cosine amplitudes times the
/// integral tail bound).
inline SeriesTail series_certificate(const ModelSpec& spec) {
    spec.validate();
    const double l4 = spec.L * spec.L * spec.L * spec.L;
    const double pi2 = kPi * kPi;
    SeriesTail tail;
    tail.cutoff = spec.lmax;
    if (spec.group == Group::SU3) {
        tail.tail_bound = (2.0 / (pi2 * l4)) * 12.0 * series_tail_bound(spec.lmax, 4);
        return tail;
    }
    switch (spec.scenario) {
        case Scenario::Vacuum:
            tail.tail_bound = (6.0 + 8.0 * spec.n_f) / (pi2 * l4) *
                              series_tail_bound(spec.lmax, 4);
            break;
        case Scenario::Thermal:
            if (spec.thermal_form == ThermalForm::DoubleSum) {
                const double vac = (6.0 + 8.0 * spec.n_f) / (pi2 * l4) *
                                   series_tail_bound(spec.lmax, 4);
                const double per_m =
                    (2.0 / pi2 + 4.0 * spec.n_f / (pi2 * l4)) / l4;
                tail.tail_bound = vac + (2.0 * spec.m_cutoff + 1.0) * per_m *
                                            series_tail_bound(spec.lmax, 4);
            } else {
                const double pref =
                    (2.0 * spec.V / (spec.L * spec.L * spec.L)) * (spec.L / *spec.beta);
                const double amp =
                    pref * (2.0 + (spec.include_constant_terms ? 1.0 : 0.0));
                tail.tail_bound = amp * series_tail_bound(spec.lmax, 3);
            }
            break;
        case Scenario::Density:
            tail.tail_bound = 0.0;  // closed-form polynomial, no series
            break;
    }
    return tail;
}

} // namespace emm
