#pragma once

// Variational quantum linear solver.
//
// Minimizes the global cost C(θ) = 1 - |<Y|ψ(θ)>|² / <ψ(θ)|ψ(θ)> with
// |ψ(θ)> = S V(θ)|0>, so C = 0 exactly when V(θ)|0> is proportional to S⁻¹|Y>.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qspline/bspline.hpp"
#include "qspline/decomp.hpp"
#include "qspline/matrix.hpp"
#include "qspline/statevector.hpp"

namespace qspline {

enum class Entangler { LinearCx, LinearCz, RingCz, None };

std::string entangler_name(Entangler e);

/// Ry on every qubit, then `layers` blocks of [entangler chain, Ry on every qubit].
struct AnsatzConfig {
    unsigned n_qubits = 1;
    unsigned layers = 5;
    Entangler entangler = Entangler::LinearCx;

    std::size_t parameter_count() const { return std::size_t{n_qubits} * (layers + 1); }
};

Circuit ansatz_circuit(const AnsatzConfig& config, std::span<const double> theta);
/// V(θ)|0...0>
QuantumState ansatz_state(const AnsatzConfig& config, std::span<const double> theta);

enum class OptimizerKind { GradientDescent, Bfgs, NelderMead };

std::string optimizer_name(OptimizerKind kind);

enum class GradientKind { CentralDifference, ParameterShift };

struct SolveConfig {
    EstimationMode mode = ExactMode{};
    OptimizerKind optimizer = OptimizerKind::Bfgs;
    GradientKind gradient = GradientKind::CentralDifference;
    double learning_rate = 0.1;
    double fd_step = 1e-4;
    std::size_t max_iterations = 2000;
    /// Stall threshold on per-iteration cost improvement (10 consecutive stalls stop).
    double tolerance = 1e-10;
    unsigned restarts = 5;
    std::uint64_t seed = 42;
    /// A solve is reported as converged when its best cost is at or below this.
    double cost_target = 1e-3;
};

struct VqlsSolution {
    std::vector<double> theta_opt;
    QuantumState beta_state;
    double final_cost;
    std::vector<double> cost_trace;
    unsigned restarts_used;
    unsigned best_restart;
    std::uint64_t seed;
    bool converged;
};

/// Global cost evaluator for one linear system. Exact mode uses dense algebra;
/// shots mode assembles <Y|ψ> and <ψ|ψ> from Hadamard tests over the LCU terms.
class GlobalCost {
public:
    GlobalCost(const Matrix& s, const QuantumState& y, AnsatzConfig config, EstimationMode mode);
    GlobalCost(const LcuDecomposition& s, const QuantumState& y, AnsatzConfig config,
               EstimationMode mode);

    double operator()(std::span<const double> theta) const;
    /// Exact-mode gradient from the shift rule dV(θ)|0>/dθ_j = V(θ + π e_j)|0> / 2.
    std::vector<double> shift_gradient(std::span<const double> theta) const;

    const AnsatzConfig& config() const { return config_; }
    const Matrix& matrix() const { return matrix_; }

private:
    double exact(std::span<const double> theta) const;
    double shots(std::span<const double> theta, const ShotsMode& mode) const;

    Matrix matrix_;
    LcuDecomposition lcu_;
    std::vector<double> y_;
    Circuit y_circuit_;
    AnsatzConfig config_;
    EstimationMode mode_;
};

double cost_global(const Matrix& s, const QuantumState& y, const AnsatzConfig& config,
                   std::span<const double> theta, const EstimationMode& mode);
double cost_global(const LcuDecomposition& s, const QuantumState& y, const AnsatzConfig& config,
                   std::span<const double> theta, const EstimationMode& mode);

/// Best-of-restarts solve of S β = Y. Y is normalized internally. Throws for
/// non-square, singular or non-power-of-two systems.
VqlsSolution solve(const DesignMatrix& s, std::span<const double> y, const SolveConfig& solve_config,
                   const AnsatzConfig& ansatz_config);
VqlsSolution solve(const Matrix& s, std::span<const double> y, const SolveConfig& solve_config,
                   const AnsatzConfig& ansatz_config);

/// Default ansatz for an n-qubit system.
AnsatzConfig default_ansatz(unsigned n_qubits);

}  // namespace qspline
