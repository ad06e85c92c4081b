#include "qspline/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qspline/kernels.hpp"
#include "qspline/rng.hpp"

namespace qspline {

namespace {

std::vector<Complex> gate_matrix(GateKind kind, double angle) {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex i{0.0, 1.0};
    switch (kind) {
        case GateKind::I: return {1, 0, 0, 1};
        case GateKind::X: return {0, 1, 1, 0};
        case GateKind::Y: return {0, -i, i, 0};
        case GateKind::Z: return {1, 0, 0, -1};
        case GateKind::H: return {r, r, r, -r};
        case GateKind::Ry: {
            const double c = std::cos(angle / 2.0);
            const double s = std::sin(angle / 2.0);
            return {c, -s, s, c};
        }
        case GateKind::CZ:
            return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
        case GateKind::CX:
            return {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    }
    throw std::logic_error("unknown gate kind");
}

void check_unitary(std::span<const Complex> m, unsigned dim) {
    for (unsigned r = 0; r < dim; ++r) {
        for (unsigned c = 0; c < dim; ++c) {
            Complex acc{};
            for (unsigned k = 0; k < dim; ++k) acc += std::conj(m[k * dim + r]) * m[k * dim + c];
            const double expected = r == c ? 1.0 : 0.0;
            if (std::abs(acc - expected) > kUnitaryTolerance) {
                throw std::invalid_argument("gate matrix is not unitary");
            }
        }
    }
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

unsigned log2_exact(std::size_t n) {
    unsigned q = 0;
    while ((std::size_t{1} << q) < n) ++q;
    return q;
}

}  // namespace

Gate::Gate(GateKind kind, double angle)
    : kind_(kind),
      angle_(kind == GateKind::Ry ? angle : 0.0),
      dim_(kind == GateKind::CZ || kind == GateKind::CX ? 4U : 2U),
      matrix_(gate_matrix(kind, angle)) {
    check_unitary(matrix_, dim_);
}

std::string Gate::name() const {
    switch (kind_) {
        case GateKind::I: return "I";
        case GateKind::X: return "X";
        case GateKind::Y: return "Y";
        case GateKind::Z: return "Z";
        case GateKind::H: return "H";
        case GateKind::CZ: return "CZ";
        case GateKind::CX: return "CX";
        case GateKind::Ry: break;
    }
    if (angle_ == 3.0 * std::numbers::pi) return "Ry(3π)";
    return "Ry(" + std::to_string(angle_) + ")";
}

QuantumState QuantumState::zero(unsigned n_qubits) { return basis(n_qubits, 0); }

QuantumState QuantumState::basis(unsigned n_qubits, std::uint64_t index) {
    if (n_qubits == 0 || n_qubits > 30) throw std::invalid_argument("qubit count out of range");
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) throw std::out_of_range("basis index out of range");
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return QuantumState(n_qubits, std::move(amps));
}

QuantumState QuantumState::from_amplitudes(std::vector<Complex> amplitudes) {
    if (amplitudes.size() < 2 || !is_power_of_two(amplitudes.size())) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    const double n2 = kernels::omp::norm_squared(amplitudes);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("amplitudes are not unit norm");
    }
    const unsigned n = log2_exact(amplitudes.size());
    return QuantumState(n, std::move(amplitudes));
}

double QuantumState::norm() const { return std::sqrt(kernels::omp::norm_squared(amplitudes_)); }

std::vector<double> QuantumState::real_amplitudes(double tol) const {
    std::vector<double> out(amplitudes_.size());
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (std::abs(amplitudes_[i].imag()) > tol) {
            throw std::domain_error("state has a non-negligible imaginary part");
        }
        out[i] = amplitudes_[i].real();
    }
    return out;
}

QuantumState apply_operation(QuantumState state, const Operation& op) {
    const unsigned n = state.n_qubits_;
    if (op.targets.size() != op.gate.arity()) {
        throw std::invalid_argument("gate arity does not match target count");
    }
    std::uint64_t used = 0;
    auto claim = [&](unsigned q) {
        if (q >= n) throw std::out_of_range("qubit index out of range");
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (used & bit) throw std::invalid_argument("qubit used twice in one operation");
        used |= bit;
    };
    for (unsigned t : op.targets) claim(t);
    std::uint64_t ctrl_mask = 0;
    std::uint64_t ctrl_value = 0;
    for (const auto& c : op.controls) {
        claim(c.qubit);
        ctrl_mask |= std::uint64_t{1} << c.qubit;
        if (c.value) ctrl_value |= std::uint64_t{1} << c.qubit;
    }

    const auto m = op.gate.matrix();
    if (op.gate.arity() == 1) {
        kernels::Matrix2 m2;
        std::copy(m.begin(), m.end(), m2.begin());
        kernels::omp::apply_1q(state.amplitudes_, m2, op.targets[0], ctrl_mask, ctrl_value);
    } else {
        kernels::Matrix4 m4;
        std::copy(m.begin(), m.end(), m4.begin());
        kernels::omp::apply_2q(state.amplitudes_, m4, op.targets[0], op.targets[1], ctrl_mask,
                               ctrl_value);
    }
    return state;
}

QuantumState apply_gate(QuantumState state, const Gate& gate, std::span<const unsigned> targets) {
    return apply_operation(std::move(state),
                           Operation{gate, std::vector<unsigned>(targets.begin(), targets.end()), {}});
}

QuantumState run_circuit(QuantumState state, const Circuit& circuit) {
    for (const auto& op : circuit) state = apply_operation(std::move(state), op);
    return state;
}

QuantumState prepare(const Circuit& circuit, unsigned n_qubits) {
    return run_circuit(QuantumState::zero(n_qubits), circuit);
}

unsigned circuit_width(const Circuit& circuit) {
    unsigned width = 0;
    for (const auto& op : circuit) {
        for (unsigned t : op.targets) width = std::max(width, t + 1);
        for (const auto& c : op.controls) width = std::max(width, c.qubit + 1);
    }
    return width;
}

Circuit controlled(const Circuit& circuit, Control control) {
    Circuit out = circuit;
    for (auto& op : out) op.controls.push_back(control);
    return out;
}

Complex inner_product(const QuantumState& a, const QuantumState& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("state dimensions differ");
    return kernels::omp::inner(a.amplitudes(), b.amplitudes());
}

EncodedState amplitude_encode(std::span<const double> vector) {
    const std::size_t dim = vector.size();
    if (dim < 2 || !is_power_of_two(dim)) {
        throw std::invalid_argument("vector length must be a power of two >= 2");
    }
    double n2 = 0.0;
    for (double v : vector) n2 += v * v;
    if (!(n2 > 0.0)) throw std::invalid_argument("cannot encode a zero vector");
    const double inv = 1.0 / std::sqrt(n2);

    std::vector<double> a(dim);
    std::transform(vector.begin(), vector.end(), a.begin(), [inv](double v) { return v * inv; });
    const unsigned n = log2_exact(dim);

    // Norms of every aligned block, level by level: blocks[l][p] is the norm of the
    // 2^(n-l) amplitudes whose top l bits equal p.
    std::vector<std::vector<double>> blocks(n + 1);
    blocks[n].resize(dim);
    for (std::size_t i = 0; i < dim; ++i) blocks[n][i] = std::abs(a[i]);
    for (unsigned l = n; l-- > 0;) {
        blocks[l].resize(std::size_t{1} << l);
        for (std::size_t p = 0; p < blocks[l].size(); ++p) {
            blocks[l][p] = std::hypot(blocks[l + 1][2 * p], blocks[l + 1][2 * p + 1]);
        }
    }

    Circuit circuit;
    for (unsigned l = 0; l < n; ++l) {
        const unsigned target = n - 1 - l;
        for (std::size_t p = 0; p < (std::size_t{1} << l); ++p) {
            double theta;
            if (l + 1 == n) {
                // Leaf level carries the signs.
                theta = 2.0 * std::atan2(a[2 * p + 1], a[2 * p]);
            } else {
                theta = 2.0 * std::atan2(blocks[l + 1][2 * p + 1], blocks[l + 1][2 * p]);
            }
            if (theta == 0.0) continue;
            Operation op{Gate::ry(theta), {target}, {}};
            for (unsigned j = 0; j < l; ++j) {
                op.controls.push_back({n - 1 - j, ((p >> (l - 1 - j)) & 1U) != 0});
            }
            circuit.push_back(std::move(op));
        }
    }
    QuantumState state = prepare(circuit, n);
    return {std::move(state), std::move(circuit)};
}

EncodedState amplitude_encode(std::span<const Complex> vector) {
    std::vector<double> re(vector.size());
    for (std::size_t i = 0; i < vector.size(); ++i) {
        if (vector[i].imag() != 0.0) {
            throw std::invalid_argument("complex amplitudes are not supported");
        }
        re[i] = vector[i].real();
    }
    return amplitude_encode(std::span<const double>(re));
}

std::string mode_name(const EstimationMode& mode) {
    if (const auto* s = std::get_if<ShotsMode>(&mode)) {
        return "shots(" + std::to_string(s->shots) + ")";
    }
    return "exact";
}

double hadamard_test(const Circuit& left, const Circuit& right, unsigned n_qubits,
                     const EstimationMode& mode) {
    if (n_qubits == 0) throw std::invalid_argument("hadamard test needs at least one qubit");
    if (circuit_width(left) > n_qubits || circuit_width(right) > n_qubits) {
        throw std::invalid_argument("preparation circuit is wider than the register");
    }
    const unsigned ancilla = n_qubits;
    const unsigned anc[] = {ancilla};
    QuantumState state = QuantumState::zero(n_qubits + 1);
    state = apply_gate(std::move(state), Gate::h(), anc);
    state = run_circuit(std::move(state), controlled(right, {ancilla, true}));
    state = run_circuit(std::move(state), controlled(left, {ancilla, false}));
    state = apply_gate(std::move(state), Gate::h(), anc);

    const std::uint64_t anc_bit = std::uint64_t{1} << ancilla;
    if (const auto* shots = std::get_if<ShotsMode>(&mode)) {
        if (shots->shots == 0) throw std::invalid_argument("shots must be positive");
        const ShotCounts counts = sample(state, shots->shots, shots->seed);
        std::int64_t balance = 0;
        for (const auto& [outcome, count] : counts.counts) {
            balance += (outcome & anc_bit) ? -static_cast<std::int64_t>(count)
                                           : static_cast<std::int64_t>(count);
        }
        return static_cast<double>(balance) / static_cast<double>(shots->shots);
    }
    double p0 = 0.0;
    double p1 = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        ((i & anc_bit) ? p1 : p0) += std::norm(amps[i]);
    }
    return p0 - p1;
}

ShotCounts sample(const QuantumState& state, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots must be positive");
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    std::size_t last = amps.size() - 1;
    while (last > 0 && std::norm(amps[last]) == 0.0) --last;
    Rng rng(seed);
    std::vector<std::uint64_t> tally(amps.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        // upper_bound skips zero-probability outcomes since their cdf entry repeats.
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        ++tally[it == cdf.end() ? last : static_cast<std::size_t>(it - cdf.begin())];
    }
    ShotCounts out;
    out.total_shots = shots;
    out.seed = seed;
    for (std::size_t i = 0; i < tally.size(); ++i) {
        if (tally[i] != 0) out.counts.emplace(i, tally[i]);
    }
    return out;
}

}  // namespace qspline
