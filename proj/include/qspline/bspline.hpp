#pragma once

// B-spline bases and the design matrices of the spline linear system.
//
// Indices are zero-based: basis function i in [0, T - d - 1) is supported on
// [knots[i], knots[i + d + 1]). The half-open convention is closed at the last
// knot so the basis still sums to one at the right end of the domain.

#include <optional>
#include <span>
#include <vector>

#include "qspline/matrix.hpp"

namespace qspline {

class KnotVector {
public:
    /// Requires non-decreasing knots and knots.size() >= degree + 2.
    KnotVector(std::vector<double> knots, unsigned degree);

    /// `count` equally spaced knots covering [lo, hi].
    static KnotVector uniform(std::size_t count, unsigned degree, double lo = 0.0, double hi = 1.0);

    std::span<const double> knots() const { return knots_; }
    double operator[](std::size_t i) const { return knots_[i]; }
    std::size_t size() const { return knots_.size(); }
    unsigned degree() const { return degree_; }
    /// T - d - 1
    std::size_t basis_count() const { return knots_.size() - degree_ - 1; }

private:
    std::vector<double> knots_;
    unsigned degree_;
};

/// Cox-de Boor recursion with 0/0 := 0. Throws std::out_of_range for i outside
/// [0, T - d - 1).
double basis_value(const KnotVector& knots, std::size_t i, unsigned degree, double x);

enum class DesignForm { General, D1Explicit, Dilated };

struct DesignMatrix {
    Matrix entries;
    std::vector<double> points;
    std::optional<KnotVector> knots;
    DesignForm form;

    std::size_t size() const { return entries.rows(); }
};

/// entries(k, i) = B_{i,d}(points[k]). Needs points.size() == T - d - 1.
DesignMatrix design_matrix_general(const KnotVector& knots, std::span<const double> points);

/// Upper-bidiagonal degree-1 system: unit first and last rows, interior row k holds
/// (1 - x_k, x_k) on the diagonal and superdiagonal.
DesignMatrix design_matrix_d1(std::span<const double> points);

/// Points u_k at which the general degree-1 construction on `knots` (T = K + 2)
/// reproduces design_matrix_d1(fractions): u_k = knots[k + 1] + fractions[k] * h_k,
/// with the last point on knots[K].
std::vector<double> d1_evaluation_points(const KnotVector& knots, std::span<const double> fractions);

/// [[0, S], [S^T, 0]]. Solving H (u, v) = (Y, 0) gives u = 0, v = beta.
DesignMatrix hermitian_dilation(const DesignMatrix& s);

/// Collocation points giving a nonsingular general design matrix: interval midpoints
/// for d = 0, Greville abscissae otherwise.
std::vector<double> greville_points(const KnotVector& knots);

}  // namespace qspline
