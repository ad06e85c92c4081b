#pragma once

// Linear combinations of unitaries for the spline design matrix.
//
// A real matrix is expanded over tensor products of the four real orthogonal
// single-qubit gates {I, X, Z, Ry(3π)}. Ry(3π) = [[0, 1], [-1, 0]] = iY, so this is the
// Pauli basis with the phase of every Y absorbed into the gate: coefficients stay real
// and each term is a real orthogonal matrix that circuits can apply directly.

#include <cstdint>
#include <string>
#include <vector>

#include "qspline/matrix.hpp"
#include "qspline/statevector.hpp"

namespace qspline {

/// Single-qubit factor of a term. W denotes Ry(3π) = iY.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, W = 3 };

Gate letter_gate(PauliLetter letter);

/// letters[q] acts on qubit q (little-endian). label() prints qubit n-1 first,
/// matching the Kronecker-product order, e.g. "X⊗I⊗Z" has Z on qubit 0.
struct PauliString {
    std::vector<PauliLetter> letters;

    unsigned n_qubits() const { return static_cast<unsigned>(letters.size()); }
    std::string label() const;
    Matrix matrix() const;
    /// Gates realizing the string; identity factors are omitted.
    Circuit circuit() const;
    std::vector<double> apply(std::span<const double> v) const;

    bool operator==(const PauliString&) const = default;
};

struct LcuTerm {
    double coefficient;
    PauliString unitary;
};

struct LcuDecomposition {
    std::vector<LcuTerm> terms;
    std::size_t dimension = 0;

    std::vector<double> apply(std::span<const double> v) const;
};

/// Coefficients below this magnitude are dropped by pauli_decompose.
inline constexpr double kLcuCutoff = 1e-12;

/// [[1 - a, a], [0, 1 - b]] = c0 I + c1 X + c2 Z + c3 Ry(3π) with
/// c0 = 1 - a/2 - b/2, c1 = a/2, c2 = (b - a)/2, c3 = a/2. Zero coefficients are kept.
LcuDecomposition decompose_block(double a, double b);

/// c_U = Tr(U^T A) / 2^n over all 4^n strings, dropping |c_U| < kLcuCutoff.
LcuDecomposition pauli_decompose(const Matrix& a);

/// Dense sum_j c_j U_j.
Matrix reconstruct(const LcuDecomposition& decomposition);

}  // namespace qspline
