#pragma once

// Dense statevector simulator: gates, circuits, amplitude encoding, the Hadamard
// test and shot sampling.
//
// Qubit ordering is little-endian: qubit q is bit q of the amplitude index.

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qspline {

using Complex = std::complex<double>;

/// Tolerance on sum |a_i|^2 = 1 for a QuantumState.
inline constexpr double kNormTolerance = 1e-10;
/// Tolerance on U^dagger U = I for a Gate.
inline constexpr double kUnitaryTolerance = 1e-12;

enum class GateKind { I, X, Y, Z, H, Ry, CZ, CX };

/// Ry(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
/// For two-qubit gates the local basis index is 2*bit(targets[0]) + bit(targets[1]),
/// so CX targets are {control, target}.
class Gate {
public:
    explicit Gate(GateKind kind, double angle = 0.0);

    static Gate identity() { return Gate(GateKind::I); }
    static Gate x() { return Gate(GateKind::X); }
    static Gate y() { return Gate(GateKind::Y); }
    static Gate z() { return Gate(GateKind::Z); }
    static Gate h() { return Gate(GateKind::H); }
    static Gate ry(double theta) { return Gate(GateKind::Ry, theta); }
    static Gate cz() { return Gate(GateKind::CZ); }
    static Gate cx() { return Gate(GateKind::CX); }

    GateKind kind() const { return kind_; }
    double angle() const { return angle_; }
    unsigned arity() const { return dim_ == 2 ? 1U : 2U; }
    unsigned dim() const { return dim_; }
    std::span<const Complex> matrix() const { return matrix_; }
    Complex at(unsigned row, unsigned col) const { return matrix_[row * dim_ + col]; }
    std::string name() const;

private:
    GateKind kind_;
    double angle_;
    unsigned dim_;
    std::vector<Complex> matrix_;
};

struct Control {
    unsigned qubit;
    bool value = true;
};

/// A gate on `targets`, applied only where every control qubit holds its value.
struct Operation {
    Gate gate;
    std::vector<unsigned> targets;
    std::vector<Control> controls;
};

using Circuit = std::vector<Operation>;

class QuantumState {
public:
    /// |0...0> on n qubits.
    static QuantumState zero(unsigned n_qubits);
    static QuantumState basis(unsigned n_qubits, std::uint64_t index);
    /// Validates length 2^n (n >= 1) and unit norm within kNormTolerance.
    static QuantumState from_amplitudes(std::vector<Complex> amplitudes);

    unsigned n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm() const;

    /// Real parts; throws if any imaginary part exceeds `tol`.
    std::vector<double> real_amplitudes(double tol = 1e-8) const;

private:
    QuantumState(unsigned n_qubits, std::vector<Complex> amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    friend QuantumState apply_operation(QuantumState state, const Operation& op);

    unsigned n_qubits_;
    std::vector<Complex> amplitudes_;
};

QuantumState apply_gate(QuantumState state, const Gate& gate, std::span<const unsigned> targets);
QuantumState apply_operation(QuantumState state, const Operation& op);
QuantumState run_circuit(QuantumState state, const Circuit& circuit);
/// circuit applied to |0...0>.
QuantumState prepare(const Circuit& circuit, unsigned n_qubits);

/// Largest qubit index referenced by the circuit plus one (0 for an empty circuit).
unsigned circuit_width(const Circuit& circuit);

/// Adds `control` to every operation.
Circuit controlled(const Circuit& circuit, Control control);

/// <a|b>
Complex inner_product(const QuantumState& a, const QuantumState& b);

struct EncodedState {
    QuantumState state;
    /// Multiplexed Ry rotations preparing `state` from |0...0>.
    Circuit circuit;
};

/// Prepares vector/||vector|| using a binary tree of uniformly controlled Ry rotations.
/// Length must be a power of two >= 2; zero vectors are rejected.
EncodedState amplitude_encode(std::span<const double> vector);
/// Accepts complex input only when every imaginary part is exactly zero.
EncodedState amplitude_encode(std::span<const Complex> vector);

struct ExactMode {};
struct ShotsMode {
    std::uint64_t shots;
    std::uint64_t seed;
};
using EstimationMode = std::variant<ExactMode, ShotsMode>;

std::string mode_name(const EstimationMode& mode);

/// Estimates Re <0| L^dagger R |0> with one ancilla (qubit n_qubits): H, R controlled on
/// ancilla=1, L controlled on ancilla=0, H, then P(0) - P(1).
double hadamard_test(const Circuit& left, const Circuit& right, unsigned n_qubits,
                     const EstimationMode& mode);

struct ShotCounts {
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total_shots = 0;
    std::uint64_t seed = 0;

    bool operator==(const ShotCounts&) const = default;
};

ShotCounts sample(const QuantumState& state, std::uint64_t shots, std::uint64_t seed);

}  // namespace qspline
