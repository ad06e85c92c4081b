#include "qspline/decomp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qspline {

namespace {

// Each letter is a signed permutation: row r maps to column r ^ flip with sign.
struct LetterAction {
    unsigned flip;
    double sign[2];
};

constexpr LetterAction action(PauliLetter l) {
    switch (l) {
        case PauliLetter::I: return {0, {1.0, 1.0}};
        case PauliLetter::X: return {1, {1.0, 1.0}};
        case PauliLetter::Z: return {0, {1.0, -1.0}};
        case PauliLetter::W: return {1, {1.0, -1.0}};
    }
    return {0, {1.0, 1.0}};
}

// Entry U(r, r ^ flip_mask) of the tensor product; all other entries of row r are 0.
double string_sign(const PauliString& p, std::size_t r) {
    double s = 1.0;
    for (unsigned q = 0; q < p.n_qubits(); ++q) s *= action(p.letters[q]).sign[(r >> q) & 1U];
    return s;
}

std::size_t flip_mask(const PauliString& p) {
    std::size_t m = 0;
    for (unsigned q = 0; q < p.n_qubits(); ++q) {
        if (action(p.letters[q]).flip) m |= std::size_t{1} << q;
    }
    return m;
}

}  // namespace

Gate letter_gate(PauliLetter letter) {
    switch (letter) {
        case PauliLetter::I: return Gate::identity();
        case PauliLetter::X: return Gate::x();
        case PauliLetter::Z: return Gate::z();
        case PauliLetter::W: return Gate::ry(3.0 * std::numbers::pi);
    }
    throw std::logic_error("unknown letter");
}

std::string PauliString::label() const {
    std::string out;
    for (unsigned q = n_qubits(); q-- > 0;) {
        out += letter_gate(letters[q]).name();
        if (q != 0) out += "⊗";
    }
    return out;
}

Matrix PauliString::matrix() const {
    const std::size_t dim = std::size_t{1} << n_qubits();
    const std::size_t flip = flip_mask(*this);
    Matrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) m(r, r ^ flip) = string_sign(*this, r);
    return m;
}

Circuit PauliString::circuit() const {
    Circuit c;
    for (unsigned q = 0; q < n_qubits(); ++q) {
        if (letters[q] != PauliLetter::I) c.push_back({letter_gate(letters[q]), {q}, {}});
    }
    return c;
}

std::vector<double> PauliString::apply(std::span<const double> v) const {
    const std::size_t dim = std::size_t{1} << n_qubits();
    if (v.size() != dim) throw std::invalid_argument("vector length does not match string width");
    const std::size_t flip = flip_mask(*this);
    std::vector<double> out(dim);
    for (std::size_t r = 0; r < dim; ++r) out[r] = string_sign(*this, r) * v[r ^ flip];
    return out;
}

std::vector<double> LcuDecomposition::apply(std::span<const double> v) const {
    if (v.size() != dimension) throw std::invalid_argument("vector length does not match decomposition");
    std::vector<double> out(dimension, 0.0);
    for (const auto& term : terms) {
        const auto u = term.unitary.apply(v);
        for (std::size_t i = 0; i < dimension; ++i) out[i] += term.coefficient * u[i];
    }
    return out;
}

LcuDecomposition decompose_block(double a, double b) {
    const auto one = [](PauliLetter l) { return PauliString{{l}}; };
    return LcuDecomposition{{{1.0 - a / 2.0 - b / 2.0, one(PauliLetter::I)},
                             {a / 2.0, one(PauliLetter::X)},
                             {(b - a) / 2.0, one(PauliLetter::Z)},
                             {a / 2.0, one(PauliLetter::W)}},
                            2};
}

LcuDecomposition pauli_decompose(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("matrix must be square");
    const std::size_t dim = a.rows();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("matrix dimension must be a power of two");
    }
    unsigned n = 0;
    while ((std::size_t{1} << n) < dim) ++n;

    LcuDecomposition out{{}, dim};
    const std::size_t strings = std::size_t{1} << (2 * n);
    PauliString p{std::vector<PauliLetter>(n, PauliLetter::I)};
    for (std::size_t code = 0; code < strings; ++code) {
        for (unsigned q = 0; q < n; ++q) p.letters[q] = static_cast<PauliLetter>((code >> (2 * q)) & 3U);
        // Tr(U^T A) = sum_r U(r, r^f) A(r, r^f)
        const std::size_t flip = flip_mask(p);
        double trace = 0.0;
        for (std::size_t r = 0; r < dim; ++r) trace += string_sign(p, r) * a(r, r ^ flip);
        const double c = trace / static_cast<double>(dim);
        if (std::abs(c) >= kLcuCutoff) out.terms.push_back({c, p});
    }
    return out;
}

Matrix reconstruct(const LcuDecomposition& decomposition) {
    const std::size_t dim = decomposition.dimension;
    Matrix m(dim, dim);
    for (const auto& term : decomposition.terms) {
        if ((std::size_t{1} << term.unitary.n_qubits()) != dim) {
            throw std::invalid_argument("term width does not match decomposition dimension");
        }
        const std::size_t flip = flip_mask(term.unitary);
        for (std::size_t r = 0; r < dim; ++r) {
            m(r, r ^ flip) += term.coefficient * string_sign(term.unitary, r);
        }
    }
    return m;
}

}  // namespace qspline
