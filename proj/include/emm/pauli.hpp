#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "emm/errors.hpp"
#include "emm/format.hpp"
#include "emm/oscillator.hpp"

namespace emm {

/// Tensor product of single-qubit operators from {I, X, Y, Z}, stored as two
/// bitmasks. Letter 0 (leftmost in the label) acts on the most significant
/// bit of the computational-basis index.
struct PauliString {
    int n_qubits = 0;
    std::uint32_t x = 0;  ///< bit set where the letter is X or Y
    std::uint32_t z = 0;  ///< bit set where the letter is Z or Y

    char letter(int j) const {
        const std::uint32_t bit = 1u << (n_qubits - 1 - j);
        const bool bx = (x & bit) != 0;
        const bool bz = (z & bit) != 0;
        if (bx && bz) return 'Y';
        if (bx) return 'X';
        if (bz) return 'Z';
        return 'I';
    }

    std::string label() const {
        std::string s(static_cast<std::size_t>(n_qubits), 'I');
        for (int j = 0; j < n_qubits; ++j) s[static_cast<std::size_t>(j)] = letter(j);
        return s;
    }

    /// Base-4 code with I=0, X=1, Y=2, Z=3 and letter 0 most significant;
    /// ascending code order equals lexicographic label order.
    std::uint64_t code() const {
        std::uint64_t c = 0;
        for (int j = 0; j < n_qubits; ++j) {
            int digit = 0;
            switch (letter(j)) {
                case 'X': digit = 1; break;
                case 'Y': digit = 2; break;
                case 'Z': digit = 3; break;
                default: digit = 0; break;
            }
            c = c * 4 + static_cast<std::uint64_t>(digit);
        }
        return c;
    }

    static PauliString from_label(const std::string& label) {
        PauliString s;
        s.n_qubits = static_cast<int>(label.size());
        if (s.n_qubits == 0 || s.n_qubits > 16) {
            throw ConfigError("PauliString: label length must be 1..16");
        }
        for (int j = 0; j < s.n_qubits; ++j) {
            const std::uint32_t bit = 1u << (s.n_qubits - 1 - j);
            switch (label[static_cast<std::size_t>(j)]) {
                case 'I': break;
                case 'X': s.x |= bit; break;
                case 'Y': s.x |= bit; s.z |= bit; break;
                case 'Z': s.z |= bit; break;
                default:
                    throw ConfigError("PauliString: invalid letter '" +
                                      std::string(1, label[static_cast<std::size_t>(j)]) +
                                      "'");
            }
        }
        return s;
    }
};

struct PauliTerm {
    PauliString string;
    double coefficient = 0.0;
};

/// Sparse real-weighted Pauli expansion of a Hermitian operator.
struct PauliSum {
    int n_qubits = 0;
    double zero_threshold = 1e-10;
    std::vector<PauliTerm> terms;

    std::size_t size() const { return terms.size(); }
};

inline constexpr double kDefaultPauliThreshold = 1e-10;

namespace detail {

/// Phase i^k for k mod 4.
inline Complex ipow(unsigned k) {
    switch (k & 3u) {
        case 0: return Complex(1.0, 0.0);
        case 1: return Complex(0.0, 1.0);
        case 2: return Complex(-1.0, 0.0);
        default: return Complex(0.0, -1.0);
    }
}

/// In-place Walsh-Hadamard transform (no normalization):
/// out[z] = sum_c (-1)^{popcount(c & z)} in[c].
inline void walsh_transform(std::vector<Complex>& v) {
    const std::size_t d = v.size();
    for (std::size_t len = 1; len < d; len <<= 1) {
        for (std::size_t i = 0; i < d; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                const Complex a = v[j];
                const Complex b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
        }
    }
}

inline int log2_exact(Eigen::Index dim, const char* who) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw ConfigError(std::string(who) +
                          ": dimension must be a power of two >= 2, got " +
                          std::to_string(dim));
    }
    int n = 0;
    for (Eigen::Index d = dim; d > 1; d >>= 1) ++n;
    return n;
}

} // namespace detail

/// Expansion coefficients c_P = Tr(P H) / 2^n over all 4^n strings, keeping
/// |c_P| > threshold. Coefficients of a Hermitian operator are real; a
/// residual imaginary part above 1e-8 trips the Hermiticity contract.
inline PauliSum decompose(const Matrix& h,
                          double threshold = kDefaultPauliThreshold) {
    const Eigen::Index dim = h.rows();
    const int n = detail::log2_exact(dim, "decompose");
    require_hermitian(h, "decompose");

    PauliSum sum;
    sum.n_qubits = n;
    sum.zero_threshold = threshold;

    const auto d = static_cast<std::uint32_t>(dim);
    std::vector<Complex> diag(d);
    double max_imag = 0.0;
    for (std::uint32_t x = 0; x < d; ++x) {
        for (std::uint32_t c = 0; c < d; ++c) {
            diag[c] = h(static_cast<Eigen::Index>(c),
                        static_cast<Eigen::Index>(c ^ x));
        }
        detail::walsh_transform(diag);
        for (std::uint32_t z = 0; z < d; ++z) {
            const Complex coef =
                detail::ipow(static_cast<unsigned>(std::popcount(x & z))) *
                diag[z] / static_cast<double>(dim);
            max_imag = std::max(max_imag, std::abs(coef.imag()));
            if (std::abs(coef.real()) > threshold) {
                PauliTerm term;
                term.string.n_qubits = n;
                term.string.x = x;
                term.string.z = z;
                term.coefficient = coef.real();
                sum.terms.push_back(term);
            }
        }
    }
    if (!(max_imag <= 1e-8)) {
        throw ContractError(
            "decompose: imaginary Pauli weight " + std::to_string(max_imag) +
            " for a nominally Hermitian operator");
    }
    std::sort(sum.terms.begin(), sum.terms.end(),
              [](const PauliTerm& a, const PauliTerm& b) {
                  return a.string.code() < b.string.code();
              });
    return sum;
}

/// Dense matrix of a single Pauli string.
inline Matrix pauli_matrix(const PauliString& s) {
    const Eigen::Index dim = Eigen::Index{1} << s.n_qubits;
    Matrix m = Matrix::Zero(dim, dim);
    const Complex phase =
        detail::ipow(static_cast<unsigned>(std::popcount(s.x & s.z)));
    for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(dim); ++c) {
        const double sign = (std::popcount(c & s.z) & 1) ? -1.0 : 1.0;
        m(static_cast<Eigen::Index>(c ^ s.x), static_cast<Eigen::Index>(c)) +=
            sign * phase;
    }
    return m;
}

/// Sum of coefficient-weighted Pauli strings as a dense matrix.
inline Matrix reconstruct(const PauliSum& sum) {
    const Eigen::Index dim = Eigen::Index{1} << sum.n_qubits;
    Matrix m = Matrix::Zero(dim, dim);
    for (const PauliTerm& t : sum.terms) {
        const Complex phase =
            t.coefficient *
            detail::ipow(static_cast<unsigned>(std::popcount(t.string.x & t.string.z)));
        for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(dim); ++c) {
            const double sign = (std::popcount(c & t.string.z) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(c ^ t.string.x),
              static_cast<Eigen::Index>(c)) += sign * phase;
        }
    }
    return m;
}

/// <state| sum |state> evaluated term by term through the bitmask action on
/// amplitudes; never materializes a dense matrix. Deterministic summation
/// order (terms in stored order, amplitudes in index order).
inline double expectation(const PauliSum& sum, const Vector& state) {
    const Eigen::Index dim = Eigen::Index{1} << sum.n_qubits;
    if (state.size() != dim) {
        throw ConfigError("expectation: state dimension " +
                          std::to_string(state.size()) + " != " +
                          std::to_string(dim));
    }
    const double norm = state.norm();
    if (std::abs(norm - 1.0) > 1e-10) {
        throw ContractError("expectation: state norm " + std::to_string(norm) +
                            " is not 1 within 1e-10");
    }
    double total = 0.0;
    for (const PauliTerm& t : sum.terms) {
        const Complex phase =
            detail::ipow(static_cast<unsigned>(std::popcount(t.string.x & t.string.z)));
        Complex acc(0.0, 0.0);
        for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(dim); ++c) {
            const double sign = (std::popcount(c & t.string.z) & 1) ? -1.0 : 1.0;
            acc += std::conj(state(static_cast<Eigen::Index>(c ^ t.string.x))) *
                   sign * state(static_cast<Eigen::Index>(c));
        }
        total += t.coefficient * (phase * acc).real();
    }
    return total;
}

/// One term per line: `<label> <coefficient>` with shortest round-trip
/// coefficient formatting.
inline std::string serialize(const PauliSum& sum) {
    std::string out;
    for (const PauliTerm& t : sum.terms) {
        out += t.string.label();
        out += ' ';
        out += format_double(t.coefficient);
        out += '\n';
    }
    return out;
}

inline PauliSum parse_pauli_sum(const std::string& text,
                                double threshold = kDefaultPauliThreshold) {
    PauliSum sum;
    sum.zero_threshold = threshold;
    std::istringstream in(text);
    std::string label, coeff;
    while (in >> label >> coeff) {
        PauliTerm t;
        t.string = PauliString::from_label(label);
        t.coefficient = parse_double(coeff);
        if (sum.terms.empty()) {
            sum.n_qubits = t.string.n_qubits;
        } else if (t.string.n_qubits != sum.n_qubits) {
            throw ConfigError("parse_pauli_sum: inconsistent label lengths");
        }
        sum.terms.push_back(t);
    }
    return sum;
}

} // namespace emm
