#pragma once

// Classical ground truth for the spline system.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qspline/bspline.hpp"
#include "qspline/matrix.hpp"

namespace qspline {

/// Pivots smaller than this mark the matrix as singular.
inline constexpr double kPivotTolerance = 1e-12;

enum class SolveMethod { BackSubstitution, PartialPivot };

std::string method_name(SolveMethod m);

struct ExactSolution {
    std::vector<double> beta;
    double residual;  // ||S beta - Y||
    SolveMethod method;
};

class SingularMatrixError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

bool is_upper_bidiagonal(const Matrix& s);

/// Back-substitution for upper-bidiagonal systems, Gaussian elimination with
/// partial pivoting otherwise.
ExactSolution solve_exact(const Matrix& s, std::span<const double> y);
ExactSolution solve_exact(const DesignMatrix& s, std::span<const double> y);

ExactSolution solve_back_substitution(const Matrix& s, std::span<const double> y);
ExactSolution solve_partial_pivot(const Matrix& s, std::span<const double> y);

}  // namespace qspline
