#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qspline {

/// Dense row-major real matrix. Sizes here stay below a few hundred rows.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> data() const { return data_; }

    Matrix transpose() const;
    std::vector<double> apply(std::span<const double> x) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& m);
double max_abs_diff(const Matrix& a, const Matrix& b);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
std::vector<double> normalized(std::span<const double> v);

}  // namespace qspline

namespace qspline {

/// Smallest pivot magnitude met by Gaussian elimination with partial pivoting;
/// zero for a singular matrix.
double min_pivot(const Matrix& m);

}  // namespace qspline
