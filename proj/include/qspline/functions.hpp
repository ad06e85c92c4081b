#pragma once

// Target activation functions, sampling grids and the NRMSE metric.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qspline {

enum class FunctionKind { Sigmoid, Relu, Elu, Sin };

inline constexpr std::array<FunctionKind, 4> kAllFunctions = {
    FunctionKind::Elu, FunctionKind::Relu, FunctionKind::Sigmoid, FunctionKind::Sin};

/// A target function with the raw input domain it is sampled on.
/// Defaults: sigmoid on [-5, 5], relu and elu (alpha = 1) on [-1, 1], sin on [0, π].
struct TargetFunction {
    FunctionKind kind;
    double lo;
    double hi;

    static TargetFunction standard(FunctionKind kind);
    /// Accepts the CLI identifiers sigmoid, relu, elu and sin.
    static TargetFunction from_name(std::string_view name);

    std::string name() const;
    double evaluate(double z) const;
    /// Maps t in [0, 1] onto [lo, hi].
    double to_raw(double t) const { return lo + t * (hi - lo); }
};

/// Min-max normalization recorded so it can be undone.
struct Normalization {
    double min;
    double max;

    double apply(double v) const { return (v - min) / (max - min); }
    double invert(double v) const { return min + v * (max - min); }
};

struct TargetSamples {
    std::vector<double> values;  // normalized to [0, 1]
    Normalization normalization;
};

/// K equally spaced points on [lo, hi] including both endpoints.
std::vector<double> sample_grid(std::size_t k, double lo = 0.0, double hi = 1.0);

/// f evaluated at raw inputs xs, min-max normalized over the samples.
/// Throws std::domain_error when all samples are equal.
TargetSamples target_values(const TargetFunction& fn, std::span<const double> xs);

/// sqrt(mean((est - target)^2)) / (max(target) - min(target)).
double nrmse(std::span<const double> estimates, std::span<const double> targets);

}  // namespace qspline
