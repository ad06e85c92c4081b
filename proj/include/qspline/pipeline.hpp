#pragma once

// End-to-end spline fit: sample a target, build the system, solve it variationally,
// read the estimates back and score them.

#include <cstdint>
#include <string>
#include <vector>

#include "qspline/bspline.hpp"
#include "qspline/functions.hpp"
#include "qspline/vqls.hpp"

namespace qspline {

struct FitConfig {
    TargetFunction function = TargetFunction::standard(FunctionKind::Sigmoid);
    std::size_t knots = 16;  // K, the system dimension
    unsigned degree = 1;
    SolveConfig solve;
    /// Ansatz depth; 0 selects default_ansatz(n).layers.
    unsigned layers = 0;
    Entangler entangler = Entangler::LinearCx;
    bool classical_only = false;
    /// Solve the Hermitian dilation [[0, S], [S^T, 0]] instead of S directly.
    bool dilate = false;
};

struct FitPoint {
    double x;         // input on [0, 1]
    double y;         // normalized target
    double y_hat;     // estimate in the same units
};

struct FitReport {
    std::string function;
    double domain_lo;
    double domain_hi;
    std::size_t knots;
    unsigned degree;
    std::string mode;
    std::string ansatz;
    std::string optimizer;
    std::uint64_t seed;
    std::string rng;
    unsigned restarts;
    bool dilated;
    bool classical_only;
    std::vector<FitPoint> points;
    double nrmse;
    double classical_nrmse;
    double final_cost;
    bool converged;
    double seconds;
    /// mean(ŷ - y)
    double mean_bias;
};

/// The spline system for a fit: design matrix and normalized targets.
struct SplineSystem {
    DesignMatrix design;
    std::vector<double> xs;       // on [0, 1]
    std::vector<double> targets;  // normalized to [0, 1]
};

/// Degree 1 uses the explicit bidiagonal matrix on a uniform grid; other degrees
/// collocate the general basis at Greville points of uniform knots on [0, 1].
SplineSystem build_system(const TargetFunction& fn, std::size_t k, unsigned degree);

/// Requires K a power of two in [2, 64].
FitReport run_fit(const FitConfig& config);

/// Classical interpolation baseline; its NRMSE is the floor for the variational fit.
FitReport fit_classical(const TargetFunction& fn, std::size_t k, unsigned degree = 1);

}  // namespace qspline
