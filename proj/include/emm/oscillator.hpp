#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "emm/errors.hpp"

namespace emm {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Basis truncation: the number of harmonic-oscillator levels retained.
struct TruncationConfig {
    int levels = 16;

    void validate() const {
        if (levels < 2) {
            throw ConfigError("TruncationConfig: levels must be >= 2, got " +
                              std::to_string(levels));
        }
    }

    /// Exact qubit mapping requires a power-of-two dimension; padding would
    /// change the spectrum, so non-powers of two are rejected at the point
    /// where a qubit register is actually needed.
    void validate_for_qubits() const {
        validate();
        if ((levels & (levels - 1)) != 0) {
            throw ConfigError(
                "TruncationConfig: levels must be a power of two for qubit "
                "mapping, got " + std::to_string(levels));
        }
    }

    int n_qubits() const {
        validate_for_qubits();
        int n = 0;
        for (int d = levels; d > 1; d >>= 1) ++n;
        return n;
    }
};

/// Maximum elementwise deviation from Hermiticity, |A - A^dagger|_max.
inline double hermiticity_error(const Matrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline constexpr double kHermiticityTolerance = 1e-10;

inline void require_hermitian(const Matrix& a, const std::string& who) {
    const double err = hermiticity_error(a);
    if (!(err <= kHermiticityTolerance)) {
        throw ContractError(who + ": operator is not Hermitian (max deviation " +
                            std::to_string(err) + ")");
    }
}

/// Position operator in the truncated oscillator basis:
/// phi[k-1][k] = phi[k][k-1] = sqrt(k)/sqrt(2), k = 1..N-1. Real symmetric.
inline Matrix position_op(const TruncationConfig& cfg) {
    cfg.validate();
    const int n = cfg.levels;
    Matrix x = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double v = std::sqrt(static_cast<double>(k) / 2.0);
        x(k - 1, k) = v;
        x(k, k - 1) = v;
    }
    return x;
}

/// Momentum operator in the truncated oscillator basis:
/// p[k-1][k] = -i sqrt(k)/sqrt(2), p[k][k-1] = +i sqrt(k)/sqrt(2).
/// Hermitian: purely imaginary and antisymmetric.
inline Matrix momentum_op(const TruncationConfig& cfg) {
    cfg.validate();
    const int n = cfg.levels;
    Matrix p = Matrix::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double v = std::sqrt(static_cast<double>(k) / 2.0);
        p(k - 1, k) = Complex(0.0, -v);
        p(k, k - 1) = Complex(0.0, v);
    }
    return p;
}

/// Kronecker product, dim = dim(a) * dim(b).
inline Matrix tensor_product(const Matrix& a, const Matrix& b) {
    const Eigen::Index ra = a.rows(), ca = a.cols();
    const Eigen::Index rb = b.rows(), cb = b.cols();
    Matrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i) {
        for (Eigen::Index j = 0; j < ca; ++j) {
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
        }
    }
    return out;
}

/// Spectral function calculus: op = U diag(lambda) U^dagger |-> U diag(f(lambda)) U^dagger.
/// Requires op Hermitian within kHermiticityTolerance.
inline Matrix apply_scalar_function(const Matrix& op,
                                    const std::function<double(double)>& f) {
    require_hermitian(op, "apply_scalar_function");
    Eigen::SelfAdjointEigenSolver<Matrix> es(op);
    if (es.info() != Eigen::Success) {
        throw ContractError("apply_scalar_function: eigensolver failed");
    }
    const RealVector& lambda = es.eigenvalues();
    RealVector flambda(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        flambda(i) = f(lambda(i));
    }
    return es.eigenvectors() * flambda.asDiagonal() *
           es.eigenvectors().adjoint();
}

} // namespace emm
