#include "qspline/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qspline/oracle.hpp"
#include "qspline/readout.hpp"
#include "qspline/rng.hpp"

namespace qspline {

namespace {

unsigned qubits_for(std::size_t k) {
    if (k < 2 || k > 64 || (k & (k - 1)) != 0) {
        throw std::invalid_argument("knots must be a power of two between 2 and 64");
    }
    unsigned n = 0;
    while ((std::size_t{1} << n) < k) ++n;
    return n;
}

std::vector<double> scaled(std::span<const double> v, double factor) {
    std::vector<double> out(v.begin(), v.end());
    for (double& x : out) x *= factor;
    return out;
}

FitReport base_report(const FitConfig& config, const SplineSystem& sys) {
    FitReport r{};
    r.function = config.function.name();
    r.domain_lo = config.function.lo;
    r.domain_hi = config.function.hi;
    r.knots = config.knots;
    r.degree = config.degree;
    r.seed = config.solve.seed;
    r.rng = std::string(kRngAlgorithm);
    r.restarts = config.solve.restarts;
    r.dilated = config.dilate;
    r.classical_only = config.classical_only;
    r.points.resize(sys.xs.size());
    for (std::size_t i = 0; i < sys.xs.size(); ++i) r.points[i] = {sys.xs[i], sys.targets[i], 0.0};
    return r;
}

void finish_scores(FitReport& r, std::span<const double> estimates, std::span<const double> targets) {
    double bias = 0.0;
    for (std::size_t i = 0; i < estimates.size(); ++i) {
        r.points[i].y_hat = estimates[i];
        bias += estimates[i] - targets[i];
    }
    r.mean_bias = bias / static_cast<double>(estimates.size());
    r.nrmse = nrmse(estimates, targets);
}

}  // namespace

SplineSystem build_system(const TargetFunction& fn, std::size_t k, unsigned degree) {
    std::vector<double> xs;
    DesignMatrix design = [&] {
        if (degree == 1) {
            xs = sample_grid(k, 0.0, 1.0);
            return design_matrix_d1(xs);
        }
        const auto knots = KnotVector::uniform(k + degree + 1, degree);
        xs = greville_points(knots);
        return design_matrix_general(knots, xs);
    }();
    std::vector<double> raw(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) raw[i] = fn.to_raw(xs[i]);
    auto targets = target_values(fn, raw).values;
    return {std::move(design), std::move(xs), std::move(targets)};
}

FitReport fit_classical(const TargetFunction& fn, std::size_t k, unsigned degree) {
    FitConfig config;
    config.function = fn;
    config.knots = k;
    config.degree = degree;
    config.classical_only = true;
    return run_fit(config);
}

FitReport run_fit(const FitConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const unsigned n = qubits_for(config.knots);
    const SplineSystem sys = build_system(config.function, config.knots, config.degree);
    const Matrix& s = sys.design.entries;

    FitReport report = base_report(config, sys);

    const ExactSolution exact = solve_exact(s, sys.targets);
    const auto classical_estimates = s.apply(exact.beta);
    report.classical_nrmse = nrmse(classical_estimates, sys.targets);

    if (config.classical_only) {
        report.mode = "classical";
        report.ansatz = "none";
        report.optimizer = method_name(exact.method);
        report.final_cost = 0.0;
        report.converged = true;
        finish_scores(report, classical_estimates, sys.targets);
    } else {
        const double y_scale = norm2(sys.targets);
        const auto y_norm = scaled(sys.targets, 1.0 / y_scale);

        const Matrix system = config.dilate ? hermitian_dilation(sys.design).entries : s;
        const unsigned width = config.dilate ? n + 1 : n;
        AnsatzConfig ansatz = default_ansatz(width);
        if (config.layers != 0) ansatz.layers = config.layers;
        ansatz.entangler = config.entangler;

        std::vector<double> rhs = y_norm;
        if (config.dilate) rhs.resize(2 * y_norm.size(), 0.0);
        const VqlsSolution sol = solve(system, rhs, config.solve, ansatz);

        QuantumState beta = sol.beta_state;
        if (config.dilate) {
            // Solution of the dilated system is (0, β); keep the lower half.
            const auto full = sol.beta_state.real_amplitudes();
            std::vector<double> lower(full.begin() + static_cast<std::ptrdiff_t>(config.knots), full.end());
            const double ln = norm2(lower);
            if (!(ln > 0.0)) throw std::domain_error("dilated solution has no lower block");
            std::vector<Complex> amps(lower.size());
            for (std::size_t i = 0; i < lower.size(); ++i) amps[i] = lower[i] / ln;
            beta = QuantumState::from_amplitudes(std::move(amps));
        }

        // Readout overlaps draw from their own substream.
        EstimationMode readout_mode = config.solve.mode;
        if (const auto* shots = std::get_if<ShotsMode>(&readout_mode)) {
            readout_mode = ShotsMode{shots->shots, derive_seed(config.solve.seed, 0xE57)};
        }
        const EstimateVector est = recover_estimates(s, beta, y_norm, readout_mode);

        report.mode = mode_name(config.solve.mode);
        report.ansatz = entangler_name(ansatz.entangler) + " layers=" + std::to_string(ansatz.layers) +
                        " params=" + std::to_string(ansatz.parameter_count());
        report.optimizer = optimizer_name(config.solve.optimizer) +
                           " max_iter=" + std::to_string(config.solve.max_iterations) +
                           " lr=" + std::to_string(config.solve.learning_rate) +
                           " tol=" + std::to_string(config.solve.tolerance);
        report.final_cost = sol.final_cost;
        report.converged = sol.converged;
        finish_scores(report, scaled(est.values, y_scale), sys.targets);
    }

    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace qspline
