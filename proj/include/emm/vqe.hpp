#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "emm/errors.hpp"
#include "emm/hamiltonian.hpp"
#include "emm/oscillator.hpp"
#include "emm/pauli.hpp"

namespace emm {

enum class Entanglement { Full, Linear };

inline std::string to_string(Entanglement e) {
    return e == Entanglement::Full ? "full" : "linear";
}

/// Shape of the hardware-efficient Ry variational form: an initial rotation
/// layer followed by `depth` repetitions of [entangler block; rotation layer].
struct AnsatzSpec {
    int n_qubits = 0;
    int depth = 3;
    Entanglement entanglement = Entanglement::Full;

    void validate() const {
        if (n_qubits < 1 || n_qubits > 16) {
            throw ConfigError("AnsatzSpec: n_qubits must be in 1..16");
        }
        if (depth < 0) throw ConfigError("AnsatzSpec: depth must be >= 0");
    }

    int parameter_count() const {
        validate();
        return n_qubits * (depth + 1);
    }

    /// Entangler pairs (control, target) in the pinned deterministic order.
    std::vector<std::pair<int, int>> entangler_pairs() const {
        validate();
        std::vector<std::pair<int, int>> pairs;
        if (entanglement == Entanglement::Full) {
            for (int i = 0; i < n_qubits; ++i) {
                for (int j = i + 1; j < n_qubits; ++j) pairs.emplace_back(i, j);
            }
        } else {
            for (int i = 0; i + 1 < n_qubits; ++i) pairs.emplace_back(i, i + 1);
        }
        return pairs;
    }
};

namespace detail {

/// Qubit q (0 = leftmost letter) owns bit n-1-q of the amplitude index,
/// matching the Pauli-string convention.
inline std::uint32_t qubit_bit(int n_qubits, int q) {
    return 1u << (n_qubits - 1 - q);
}

inline void apply_ry(std::vector<double>& amp, int n_qubits, int q,
                     double theta) {
    const std::uint32_t bit = qubit_bit(n_qubits, q);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const auto dim = static_cast<std::uint32_t>(amp.size());
    for (std::uint32_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        const double a = amp[i];
        const double b = amp[i | bit];
        amp[i] = c * a - s * b;
        amp[i | bit] = s * a + c * b;
    }
}

inline void apply_cx(std::vector<double>& amp, int n_qubits, int control,
                     int target) {
    const std::uint32_t cb = qubit_bit(n_qubits, control);
    const std::uint32_t tb = qubit_bit(n_qubits, target);
    const auto dim = static_cast<std::uint32_t>(amp.size());
    for (std::uint32_t i = 0; i < dim; ++i) {
        if ((i & cb) && !(i & tb)) {
            std::swap(amp[i], amp[i | tb]);
        }
    }
}

/// splitmix64 step, used to derive independent per-restart seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro-free deterministic uniform in [0, 1): top 53 bits of a 64-bit
/// state stream (implementation-defined std distributions are avoided so
/// results are bit-identical across standard libraries).
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed) : state_(seed) {
        // Warm up so trivially related seeds decorrelate.
        for (int i = 0; i < 4; ++i) (void)splitmix64(state_);
    }
    double next() {
        return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace detail

/// Statevector of the Ry ansatz applied to |0...0>. Real amplitudes by
/// construction (Ry and CX are real); returned as a complex vector for
/// interoperability with Hermitian operators.
inline Vector apply_ansatz(const AnsatzSpec& spec,
                           const Eigen::VectorXd& params) {
    spec.validate();
    if (params.size() != spec.parameter_count()) {
        throw ConfigError("apply_ansatz: expected " +
                          std::to_string(spec.parameter_count()) +
                          " parameters, got " + std::to_string(params.size()));
    }
    const int n = spec.n_qubits;
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> amp(dim, 0.0);
    amp[0] = 1.0;

    int next = 0;
    for (int q = 0; q < n; ++q) detail::apply_ry(amp, n, q, params(next++));
    const auto pairs = spec.entangler_pairs();
    for (int d = 0; d < spec.depth; ++d) {
        for (const auto& [c, t] : pairs) detail::apply_cx(amp, n, c, t);
        for (int q = 0; q < n; ++q) detail::apply_ry(amp, n, q, params(next++));
    }

    Vector out(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        out(static_cast<Eigen::Index>(i)) = Complex(amp[i], 0.0);
    }
    return out;
}

/// <psi(theta)| H |psi(theta)> via the dense quadratic form.
inline double energy(const AnsatzSpec& spec, const Eigen::VectorXd& params,
                     const Matrix& h) {
    const Vector v = apply_ansatz(spec, params);
    if (h.rows() != v.size()) {
        throw ConfigError("energy: Hamiltonian dimension " +
                          std::to_string(h.rows()) + " != statevector " +
                          std::to_string(v.size()));
    }
    return (v.adjoint() * h * v)(0, 0).real();
}

/// <psi(theta)| sum |psi(theta)> through per-string bitmask evaluation.
inline double energy(const AnsatzSpec& spec, const Eigen::VectorXd& params,
                     const PauliSum& sum) {
    return expectation(sum, apply_ansatz(spec, params));
}

struct MinimizeResult {
    double best_value = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_point;
    std::vector<double> trace;  ///< every objective evaluation, in call order
    int iterations_used = 0;
};

/// Quasi-Newton (BFGS) descent with central finite-difference gradients
/// (step 1e-6) and Armijo backtracking. Stops on gradient norm below
/// `tolerance`, step stagnation, or the iteration cap. Every objective
/// evaluation is recorded.
inline MinimizeResult minimize(
    const std::function<double(const Eigen::VectorXd&)>& objective,
    const Eigen::VectorXd& initial, int max_iterations = 600,
    double tolerance = 1e-8) {
    if (max_iterations < 1) {
        throw ConfigError("minimize: max_iterations must be >= 1");
    }
    const Eigen::Index n = initial.size();
    MinimizeResult result;
    result.best_point = initial;

    auto record = [&](const Eigen::VectorXd& x) {
        const double v = objective(x);
        if (!std::isfinite(v)) {
            throw ContractError(
                "minimize: objective returned non-finite value " +
                std::to_string(v));
        }
        result.trace.push_back(v);
        if (v < result.best_value) {
            result.best_value = v;
            result.best_point = x;
        }
        return v;
    };

    constexpr double kFdStep = 1e-6;
    auto gradient = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd g(n);
        Eigen::VectorXd probe = x;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double xi = x(i);
            probe(i) = xi + kFdStep;
            const double fp = record(probe);
            probe(i) = xi - kFdStep;
            const double fm = record(probe);
            probe(i) = xi;
            g(i) = (fp - fm) / (2.0 * kFdStep);
        }
        return g;
    };

    Eigen::VectorXd x = initial;
    double fx = record(x);
    Eigen::VectorXd g = gradient(x);
    Eigen::MatrixXd b = Eigen::MatrixXd::Identity(n, n);  // inverse Hessian

    int stagnant = 0;
    for (int iter = 1; iter <= max_iterations; ++iter) {
        result.iterations_used = iter;
        if (g.cwiseAbs().maxCoeff() < tolerance) break;

        Eigen::VectorXd d = -(b * g);
        double gtd = g.dot(d);
        if (!(gtd < 0.0)) {  // lost positive definiteness; reset to steepest descent
            b.setIdentity();
            d = -g;
            gtd = g.dot(d);
        }

        double step = 1.0;
        double fnew = fx;
        bool accepted = false;
        for (int ls = 0; ls < 50; ++ls) {
            fnew = record(x + step * d);
            if (fnew <= fx + 1e-4 * step * gtd) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;  // no acceptable step: stagnation

        const Eigen::VectorXd xnew = x + step * d;
        const Eigen::VectorXd gnew = gradient(xnew);
        const Eigen::VectorXd s = xnew - x;
        const Eigen::VectorXd y = gnew - g;
        const double sy = s.dot(y);
        if (sy > 1e-12) {
            const Eigen::VectorXd by = b * y;
            const double yby = y.dot(by);
            // Sherman-Morrison BFGS inverse update.
            b += ((sy + yby) / (sy * sy)) * (s * s.transpose()) -
                 (by * s.transpose() + s * by.transpose()) / sy;
        } else {
            b.setIdentity();
        }

        const double decrease = fx - fnew;
        x = xnew;
        fx = fnew;
        g = gnew;
        if (decrease < 1e-14 * (1.0 + std::abs(fx))) {
            if (++stagnant >= 2) break;
        } else {
            stagnant = 0;
        }
    }
    return result;
}

struct VqeResult {
    double best_energy = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_angles;
    std::vector<double> trace;  ///< all evaluations, restarts concatenated
    int restarts = 0;
    int iterations_used = 0;  ///< summed across restarts
    bool has_exact_reference = false;
    double exact_reference = 0.0;
};

/// Multi-start VQE: `restarts` independent seeded starts with angles uniform
/// in [-pi, pi], merged by (energy, restart index). Deterministic for a fixed
/// seed; restarts run sequentially.
inline VqeResult run_vqe(const ModelHamiltonian& h, const AnsatzSpec& ansatz,
                         int restarts = 10, std::uint64_t seed = 1,
                         int max_iterations = 600,
                         std::optional<double> exact_reference = std::nullopt) {
    ansatz.validate();
    if (h.n_qubits != ansatz.n_qubits) {
        throw ConfigError("run_vqe: Hamiltonian has " +
                          std::to_string(h.n_qubits) + " qubits, ansatz " +
                          std::to_string(ansatz.n_qubits));
    }
    if (restarts < 1) throw ConfigError("run_vqe: restarts must be >= 1");

    VqeResult result;
    result.restarts = restarts;
    if (exact_reference.has_value()) {
        result.has_exact_reference = true;
        result.exact_reference = *exact_reference;
    }

    const int nparams = ansatz.parameter_count();
    auto objective = [&](const Eigen::VectorXd& theta) {
        return energy(ansatz, theta, h.op);
    };

    for (int r = 0; r < restarts; ++r) {
        std::uint64_t stream = seed;
        for (int i = 0; i <= r; ++i) (void)detail::splitmix64(stream);
        detail::SeededUniform rng(stream);
        Eigen::VectorXd theta0(nparams);
        for (int i = 0; i < nparams; ++i) {
            theta0(i) = -kPi + 2.0 * kPi * rng.next();
        }
        MinimizeResult run = minimize(objective, theta0, max_iterations);
        result.iterations_used += run.iterations_used;
        result.trace.insert(result.trace.end(), run.trace.begin(),
                            run.trace.end());
        if (run.best_value < result.best_energy) {
            result.best_energy = run.best_value;
            result.best_angles = run.best_point;
        }
    }

    if (result.has_exact_reference &&
        result.best_energy < result.exact_reference - 1e-9) {
        throw ContractError(
            "run_vqe: variational bound violated (best " +
            std::to_string(result.best_energy) + " < exact " +
            std::to_string(result.exact_reference) + " - 1e-9)");
    }
    return result;
}

/// Convergence trace as CSV: header `evaluation,energy`, one row per
/// recorded objective evaluation.
inline void write_trace_csv(std::ostream& out, const std::vector<double>& trace) {
    out << "evaluation,energy\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        out << i << ',' << format_double(trace[i]) << '\n';
    }
}

} // namespace emm
