#include "qspline/vqls.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qspline/optimizer.hpp"
#include "qspline/rng.hpp"

namespace qspline {

std::string entangler_name(Entangler e) {
    switch (e) {
        case Entangler::LinearCx: return "linear-cx";
        case Entangler::LinearCz: return "linear-cz";
        case Entangler::RingCz: return "ring-cz";
        case Entangler::None: return "none";
    }
    return "unknown";
}

std::string optimizer_name(OptimizerKind kind) {
    switch (kind) {
        case OptimizerKind::GradientDescent: return "gradient-descent";
        case OptimizerKind::Bfgs: return "bfgs";
        case OptimizerKind::NelderMead: return "simplex";
    }
    return "unknown";
}

Circuit ansatz_circuit(const AnsatzConfig& config, std::span<const double> theta) {
    if (theta.size() != config.parameter_count()) {
        throw std::invalid_argument("parameter count does not match ansatz layout");
    }
    const unsigned n = config.n_qubits;
    Circuit c;
    c.reserve(theta.size() + config.layers * n);
    std::size_t k = 0;
    for (unsigned q = 0; q < n; ++q) c.push_back({Gate::ry(theta[k++]), {q}, {}});
    for (unsigned l = 0; l < config.layers; ++l) {
        switch (config.entangler) {
            case Entangler::LinearCx:
                for (unsigned q = 0; q + 1 < n; ++q) c.push_back({Gate::cx(), {q, q + 1}, {}});
                break;
            case Entangler::LinearCz:
                for (unsigned q = 0; q + 1 < n; ++q) c.push_back({Gate::cz(), {q, q + 1}, {}});
                break;
            case Entangler::RingCz:
                for (unsigned q = 0; q + 1 < n; ++q) c.push_back({Gate::cz(), {q, q + 1}, {}});
                if (n > 2) c.push_back({Gate::cz(), {n - 1, 0}, {}});
                break;
            case Entangler::None:
                break;
        }
        for (unsigned q = 0; q < n; ++q) c.push_back({Gate::ry(theta[k++]), {q}, {}});
    }
    return c;
}

QuantumState ansatz_state(const AnsatzConfig& config, std::span<const double> theta) {
    return prepare(ansatz_circuit(config, theta), config.n_qubits);
}

namespace {

void check_dimensions(std::size_t dim, const QuantumState& y, const AnsatzConfig& config) {
    if (y.dim() != dim || (std::size_t{1} << config.n_qubits) != dim) {
        throw std::invalid_argument("system, target state and ansatz dimensions disagree");
    }
}

}  // namespace

GlobalCost::GlobalCost(const Matrix& s, const QuantumState& y, AnsatzConfig config,
                       EstimationMode mode)
    : matrix_(s), y_(y.real_amplitudes()), config_(config), mode_(mode) {
    if (!s.square()) throw std::invalid_argument("system matrix must be square");
    check_dimensions(s.rows(), y, config);
    if (std::holds_alternative<ShotsMode>(mode_)) {
        lcu_ = pauli_decompose(s);
        y_circuit_ = amplitude_encode(std::span<const double>(y_)).circuit;
    }
}

GlobalCost::GlobalCost(const LcuDecomposition& s, const QuantumState& y, AnsatzConfig config,
                       EstimationMode mode)
    : matrix_(reconstruct(s)), lcu_(s), y_(y.real_amplitudes()), config_(config), mode_(mode) {
    check_dimensions(s.dimension, y, config);
    if (std::holds_alternative<ShotsMode>(mode_)) {
        y_circuit_ = amplitude_encode(std::span<const double>(y_)).circuit;
    }
}

double GlobalCost::operator()(std::span<const double> theta) const {
    if (const auto* shots_mode = std::get_if<ShotsMode>(&mode_)) return shots(theta, *shots_mode);
    return exact(theta);
}

double GlobalCost::exact(std::span<const double> theta) const {
    const auto psi = ansatz_state(config_, theta).real_amplitudes();
    const auto p = matrix_.apply(psi);
    const double overlap = dot(y_, p);
    const double norm_sq = dot(p, p);
    if (!(norm_sq > 1e-300)) throw std::domain_error("S V(θ)|0> vanished; system is singular");
    const double c = 1.0 - overlap * overlap / norm_sq;
    return std::max(c, 0.0);
}

double GlobalCost::shots(std::span<const double> theta, const ShotsMode& mode) const {
    const unsigned n = config_.n_qubits;
    const Circuit v = ansatz_circuit(config_, theta);
    std::vector<Circuit> branches;
    branches.reserve(lcu_.terms.size());
    for (const auto& term : lcu_.terms) {
        Circuit c = v;
        const Circuit u = term.unitary.circuit();
        c.insert(c.end(), u.begin(), u.end());
        branches.push_back(std::move(c));
    }

    std::uint64_t test_index = 0;
    auto next_mode = [&] {
        return EstimationMode{ShotsMode{mode.shots, derive_seed(mode.seed, test_index++)}};
    };

    double overlap = 0.0;
    for (std::size_t j = 0; j < lcu_.terms.size(); ++j) {
        overlap += lcu_.terms[j].coefficient * hadamard_test(y_circuit_, branches[j], n, next_mode());
    }
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < lcu_.terms.size(); ++i) {
        const double ci = lcu_.terms[i].coefficient;
        norm_sq += ci * ci;
        for (std::size_t j = i + 1; j < lcu_.terms.size(); ++j) {
            norm_sq += 2.0 * ci * lcu_.terms[j].coefficient *
                       hadamard_test(branches[i], branches[j], n, next_mode());
        }
    }
    if (!(norm_sq > 0.0)) throw std::domain_error("estimated <ψ|ψ> is not positive");
    return std::clamp(1.0 - overlap * overlap / norm_sq, 0.0, 1.0);
}

std::vector<double> GlobalCost::shift_gradient(std::span<const double> theta) const {
    const auto psi = ansatz_state(config_, theta).real_amplitudes();
    const auto p = matrix_.apply(psi);
    const double a = dot(y_, p);
    const double b = dot(p, p);
    std::vector<double> shifted(theta.begin(), theta.end());
    std::vector<double> grad(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        shifted[j] += std::numbers::pi;
        auto dpsi = ansatz_state(config_, shifted).real_amplitudes();
        shifted[j] = theta[j];
        for (double& v : dpsi) v *= 0.5;
        const auto dp = matrix_.apply(dpsi);
        const double da = dot(y_, dp);
        const double db = 2.0 * dot(p, dp);
        grad[j] = -(2.0 * a * da * b - a * a * db) / (b * b);
    }
    return grad;
}

double cost_global(const Matrix& s, const QuantumState& y, const AnsatzConfig& config,
                   std::span<const double> theta, const EstimationMode& mode) {
    return GlobalCost(s, y, config, mode)(theta);
}

double cost_global(const LcuDecomposition& s, const QuantumState& y, const AnsatzConfig& config,
                   std::span<const double> theta, const EstimationMode& mode) {
    return GlobalCost(s, y, config, mode)(theta);
}

AnsatzConfig default_ansatz(unsigned n_qubits) {
    return AnsatzConfig{n_qubits, n_qubits <= 1 ? 1U : n_qubits + 1, Entangler::LinearCx};
}

VqlsSolution solve(const Matrix& s, std::span<const double> y, const SolveConfig& solve_config,
                   const AnsatzConfig& ansatz_config) {
    if (!s.square()) throw std::invalid_argument("system matrix must be square");
    const std::size_t dim = s.rows();
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("system dimension must be a power of two");
    }
    if (y.size() != dim) throw std::invalid_argument("right-hand side length mismatch");
    if (min_pivot(s) < 1e-12) throw std::domain_error("system matrix is singular");
    if (solve_config.restarts == 0) throw std::invalid_argument("restarts must be positive");

    const auto y_state = amplitude_encode(y).state;
    const GlobalCost cost(s, y_state, ansatz_config, solve_config.mode);
    const Objective objective = [&cost](std::span<const double> t) { return cost(t); };
    GradientFn gradient;
    if (solve_config.gradient == GradientKind::ParameterShift &&
        std::holds_alternative<ExactMode>(solve_config.mode)) {
        gradient = [&cost](std::span<const double> t) { return cost.shift_gradient(t); };
    }

    OptimizeOptions options;
    options.learning_rate = solve_config.learning_rate;
    options.fd_step = solve_config.fd_step;
    options.max_iterations = solve_config.max_iterations;
    options.tolerance = solve_config.tolerance;

    const std::size_t n_params = ansatz_config.parameter_count();
    const int restarts = static_cast<int>(solve_config.restarts);
    std::vector<OptimizeResult> results(static_cast<std::size_t>(restarts));

    // Restarts are independent; each draws its start point from its own substream.
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(solve_config.seed, static_cast<std::uint64_t>(r)));
        std::vector<double> theta0(n_params);
        for (double& t : theta0) t = rng.uniform(0.0, 2.0 * std::numbers::pi);
        OptimizeResult res;
        switch (solve_config.optimizer) {
            case OptimizerKind::GradientDescent:
                res = gradient_descent(objective, std::move(theta0), options, gradient);
                break;
            case OptimizerKind::Bfgs:
                res = bfgs(objective, std::move(theta0), options, gradient);
                break;
            case OptimizerKind::NelderMead:
                res = nelder_mead(objective, std::move(theta0), options);
                break;
        }
        results[static_cast<std::size_t>(r)] = std::move(res);
    }

    // Lowest cost wins; ties go to the lowest restart index.
    std::size_t best = 0;
    for (std::size_t r = 1; r < results.size(); ++r) {
        if (results[r].value < results[best].value) best = r;
    }
    auto& winner = results[best];
    QuantumState beta = ansatz_state(ansatz_config, winner.x);
    return VqlsSolution{std::move(winner.x),
                        std::move(beta),
                        winner.value,
                        std::move(winner.trace),
                        solve_config.restarts,
                        static_cast<unsigned>(best),
                        solve_config.seed,
                        winner.value <= solve_config.cost_target};
}

VqlsSolution solve(const DesignMatrix& s, std::span<const double> y, const SolveConfig& solve_config,
                   const AnsatzConfig& ansatz_config) {
    return solve(s.entries, y, solve_config, ansatz_config);
}

}  // namespace qspline
