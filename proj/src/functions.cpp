#include "qspline/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qspline {

TargetFunction TargetFunction::standard(FunctionKind kind) {
    switch (kind) {
        case FunctionKind::Sigmoid: return {kind, -5.0, 5.0};
        case FunctionKind::Relu: return {kind, -1.0, 1.0};
        case FunctionKind::Elu: return {kind, -1.0, 1.0};
        case FunctionKind::Sin: return {kind, 0.0, std::numbers::pi};
    }
    throw std::logic_error("unknown function kind");
}

TargetFunction TargetFunction::from_name(std::string_view name) {
    if (name == "sigmoid") return standard(FunctionKind::Sigmoid);
    if (name == "relu") return standard(FunctionKind::Relu);
    if (name == "elu") return standard(FunctionKind::Elu);
    if (name == "sin") return standard(FunctionKind::Sin);
    throw std::invalid_argument("unknown function '" + std::string(name) + "'");
}

std::string TargetFunction::name() const {
    switch (kind) {
        case FunctionKind::Sigmoid: return "sigmoid";
        case FunctionKind::Relu: return "relu";
        case FunctionKind::Elu: return "elu";
        case FunctionKind::Sin: return "sin";
    }
    return "unknown";
}

double TargetFunction::evaluate(double z) const {
    switch (kind) {
        case FunctionKind::Sigmoid: return 1.0 / (1.0 + std::exp(-z));
        case FunctionKind::Relu: return z > 0.0 ? z : 0.0;
        case FunctionKind::Elu: return z > 0.0 ? z : std::expm1(z);
        case FunctionKind::Sin: return std::sin(z);
    }
    return 0.0;
}

std::vector<double> sample_grid(std::size_t k, double lo, double hi) {
    if (k < 2) throw std::invalid_argument("grid needs at least two points");
    std::vector<double> xs(k);
    const double span = hi - lo;
    const double last = static_cast<double>(k - 1);
    // Fill from both ends so the grid is exactly symmetric about the midpoint.
    for (std::size_t i = 0; i < k; ++i) {
        const double t = static_cast<double>(i) / last;
        xs[i] = (2 * i < k) ? lo + span * t : hi - span * (static_cast<double>(k - 1 - i) / last);
    }
    return xs;
}

TargetSamples target_values(const TargetFunction& fn, std::span<const double> xs) {
    std::vector<double> raw(xs.size());
    std::transform(xs.begin(), xs.end(), raw.begin(), [&](double x) { return fn.evaluate(x); });
    const auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
    if (raw.empty() || !(*hi > *lo)) throw std::domain_error("target values have no range");
    const Normalization norm{*lo, *hi};
    for (double& v : raw) v = norm.apply(v);
    return {std::move(raw), norm};
}

double nrmse(std::span<const double> estimates, std::span<const double> targets) {
    if (estimates.size() != targets.size() || targets.size() < 2) {
        throw std::invalid_argument("nrmse needs equal lengths of at least two");
    }
    const auto [lo, hi] = std::minmax_element(targets.begin(), targets.end());
    const double range = *hi - *lo;
    if (!(range > 0.0)) throw std::domain_error("nrmse undefined for a constant target");
    double sum = 0.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const double e = estimates[i] - targets[i];
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(targets.size())) / range;
}

}  // namespace qspline
