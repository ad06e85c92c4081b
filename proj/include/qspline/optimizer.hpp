#pragma once

// Derivative-free and finite-difference minimizers used by the variational solver.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace qspline {

using Objective = std::function<double(std::span<const double>)>;
using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

struct OptimizeResult {
    std::vector<double> x;
    double value = 0.0;
    /// Objective value after every accepted iteration, starting with the initial point.
    std::vector<double> trace;
    std::size_t iterations = 0;
    /// True when the stopping rule fired before the iteration budget ran out.
    bool stopped_early = false;
};

struct OptimizeOptions {
    double learning_rate = 0.1;
    double fd_step = 1e-4;
    std::size_t max_iterations = 2000;
    /// Stop after `patience` consecutive iterations improving the objective by less
    /// than this.
    double tolerance = 1e-6;
    std::size_t patience = 10;
    /// Stop once the objective drops below this.
    double target = 0.0;
};

std::vector<double> central_difference(const Objective& f, std::span<const double> x, double step);

/// Steepest descent with backtracking: the trial step halves until the objective
/// decreases, and an accepted step doubles the next trial step (capped at 64x the
/// initial learning rate).
OptimizeResult gradient_descent(const Objective& f, std::vector<double> x0,
                                const OptimizeOptions& options, const GradientFn& gradient = {});

/// BFGS with an Armijo backtracking line search.
OptimizeResult bfgs(const Objective& f, std::vector<double> x0, const OptimizeOptions& options,
                    const GradientFn& gradient = {});

/// Nelder-Mead simplex; learning_rate sets the initial simplex edge.
OptimizeResult nelder_mead(const Objective& f, std::vector<double> x0, const OptimizeOptions& options);

}  // namespace qspline
