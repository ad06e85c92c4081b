#include "qspline/matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qspline {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
    return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix difference dimension mismatch");
    }
    Matrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    }
    return out;
}

double max_abs(const Matrix& m) {
    double worst = 0.0;
    for (double v : m.data()) worst = std::max(worst, std::abs(v));
    return worst;
}

double max_abs_diff(const Matrix& a, const Matrix& b) { return max_abs(a - b); }

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) total += a[i] * b[i];
    return total;
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

std::vector<double> normalized(std::span<const double> v) {
    const double n = norm2(v);
    if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
    std::vector<double> out(v.begin(), v.end());
    for (double& x : out) x /= n;
    return out;
}

}  // namespace qspline

namespace qspline {

double min_pivot(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("pivoting needs a square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    double smallest = std::numeric_limits<double>::infinity();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        }
        const double p = a(piv, col);
        smallest = std::min(smallest, std::abs(p));
        if (p == 0.0) return 0.0;
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) / p;
            if (f == 0.0) continue;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    return smallest;
}

}  // namespace qspline
