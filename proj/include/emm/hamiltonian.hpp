#pragma once

#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "emm/errors.hpp"
#include "emm/model_spec.hpp"
#include "emm/oscillator.hpp"
#include "emm/potentials.hpp"

namespace emm {

/// Dense Hermitian Hamiltonian together with the configuration that built it.
struct ModelHamiltonian {
    Matrix op;
    int n_qubits = 0;
    ModelSpec spec;
    TruncationConfig truncation;
};

/// H = p^2/2 + V_eff(phi) on the truncated oscillator basis; the potential is
/// evaluated through the spectral calculus of the position operator.
inline ModelHamiltonian build_su2(const ModelSpec& spec,
                                  const TruncationConfig& trunc) {
    spec.validate();
    if (spec.group != Group::SU2) {
        throw ConfigError("build_su2: spec must have group su2");
    }
    trunc.validate_for_qubits();

    const Matrix x = position_op(trunc);
    const Matrix p = momentum_op(trunc);
    const Matrix kinetic = 0.5 * (p * p);
    const Matrix v = apply_scalar_function(
        x, [&spec](double phi) { return su2_potential(phi, spec); });

    ModelHamiltonian h;
    h.op = kinetic + v;
    h.n_qubits = trunc.n_qubits();
    h.spec = spec;
    h.truncation = trunc;
    require_hermitian(h.op, "build_su2");
    return h;
}

/// H = p1^2/2 + p2^2/2 + V_eff(phi1, phi2) with phi1 = phi (x) I,
/// phi2 = I (x) phi. The two-variable potential is evaluated on the joint
/// product eigenbasis of the commuting pair (phi1, phi2): entries
/// V(lambda_j, lambda_k) rotated back by U (x) U.
inline ModelHamiltonian build_su3(const ModelSpec& spec,
                                  const TruncationConfig& trunc) {
    spec.validate();
    if (spec.group != Group::SU3) {
        throw ConfigError("build_su3: spec must have group su3");
    }
    trunc.validate_for_qubits();

    const int n = trunc.levels;
    const Matrix x = position_op(trunc);
    const Matrix p = momentum_op(trunc);
    const Matrix kinetic1 = 0.5 * (p * p);
    const Matrix eye = Matrix::Identity(n, n);

    Eigen::SelfAdjointEigenSolver<Matrix> es(x);
    if (es.info() != Eigen::Success) {
        throw ContractError("build_su3: position eigensolver failed");
    }
    const RealVector& lambda = es.eigenvalues();
    const Matrix u2 = tensor_product(es.eigenvectors(), es.eigenvectors());

    RealVector vdiag(static_cast<Eigen::Index>(n) * n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            vdiag(static_cast<Eigen::Index>(j) * n + k) =
                su3_vacuum(lambda(j), lambda(k), spec);
        }
    }

    ModelHamiltonian h;
    h.op = tensor_product(kinetic1, eye) + tensor_product(eye, kinetic1) +
           u2 * vdiag.asDiagonal() * u2.adjoint();
    h.n_qubits = 2 * trunc.n_qubits();
    h.spec = spec;
    h.truncation = trunc;
    require_hermitian(h.op, "build_su3");
    return h;
}

/// Scenario-aware construction.
inline ModelHamiltonian build_hamiltonian(const ModelSpec& spec,
                                          const TruncationConfig& trunc) {
    return spec.group == Group::SU2 ? build_su2(spec, trunc)
                                    : build_su3(spec, trunc);
}

struct GroundState {
    double energy = 0.0;
    Vector state;
};

/// Smallest eigenvalue and a unit-norm eigenvector of the dense Hermitian
/// operator, with a residual contract check.
inline GroundState ground_state(const Matrix& op) {
    require_hermitian(op, "ground_state");
    Eigen::SelfAdjointEigenSolver<Matrix> es(op);
    if (es.info() != Eigen::Success) {
        throw ContractError("ground_state: eigensolver failed");
    }
    GroundState g;
    g.energy = es.eigenvalues()(0);
    g.state = es.eigenvectors().col(0);
    const double residual = (op * g.state - g.energy * g.state).norm();
    if (!(residual < 1e-8)) {
        throw ContractError("ground_state: eigenpair residual " +
                            std::to_string(residual) + " exceeds 1e-8");
    }
    return g;
}

inline GroundState ground_state(const ModelHamiltonian& h) {
    return ground_state(h.op);
}

inline double ground_energy(const Matrix& op) { return ground_state(op).energy; }

inline double ground_energy(const ModelHamiltonian& h) {
    return ground_state(h.op).energy;
}

} // namespace emm
