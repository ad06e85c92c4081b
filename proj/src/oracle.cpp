#include "qspline/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qspline {

std::string method_name(SolveMethod m) {
    return m == SolveMethod::BackSubstitution ? "back-substitution" : "partial-pivot";
}

bool is_upper_bidiagonal(const Matrix& s) {
    if (!s.square()) return false;
    for (std::size_t r = 0; r < s.rows(); ++r) {
        for (std::size_t c = 0; c < s.cols(); ++c) {
            if ((c < r || c > r + 1) && s(r, c) != 0.0) return false;
        }
    }
    return true;
}

namespace {

void check_shape(const Matrix& s, std::span<const double> y) {
    if (!s.square()) throw std::invalid_argument("system matrix must be square");
    if (y.size() != s.rows()) throw std::invalid_argument("right-hand side length mismatch");
}

double residual_of(const Matrix& s, std::span<const double> beta, std::span<const double> y) {
    const auto sb = s.apply(beta);
    double sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) sum += (sb[i] - y[i]) * (sb[i] - y[i]);
    return std::sqrt(sum);
}

}  // namespace

ExactSolution solve_back_substitution(const Matrix& s, std::span<const double> y) {
    check_shape(s, y);
    if (!is_upper_bidiagonal(s)) throw std::invalid_argument("matrix is not upper-bidiagonal");
    const std::size_t n = s.rows();
    std::vector<double> beta(n);
    for (std::size_t i = n; i-- > 0;) {
        if (std::abs(s(i, i)) < kPivotTolerance) throw SingularMatrixError("zero diagonal entry");
        const double upper = i + 1 < n ? s(i, i + 1) * beta[i + 1] : 0.0;
        beta[i] = (y[i] - upper) / s(i, i);
    }
    const double res = residual_of(s, beta, y);
    return {std::move(beta), res, SolveMethod::BackSubstitution};
}

ExactSolution solve_partial_pivot(const Matrix& s, std::span<const double> y) {
    check_shape(s, y);
    const std::size_t n = s.rows();
    Matrix a = s;
    std::vector<double> b(y.begin(), y.end());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        }
        if (std::abs(a(piv, col)) < kPivotTolerance) throw SingularMatrixError("matrix is singular");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
            std::swap(b[piv], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    std::vector<double> beta(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a(i, c) * beta[c];
        beta[i] = acc / a(i, i);
    }
    const double res = residual_of(s, beta, y);
    return {std::move(beta), res, SolveMethod::PartialPivot};
}

ExactSolution solve_exact(const Matrix& s, std::span<const double> y) {
    check_shape(s, y);
    return is_upper_bidiagonal(s) ? solve_back_substitution(s, y) : solve_partial_pivot(s, y);
}

ExactSolution solve_exact(const DesignMatrix& s, std::span<const double> y) {
    return solve_exact(s.entries, y);
}

}  // namespace qspline
