#include "qspline/bspline.hpp"

#include <stdexcept>

namespace qspline {

KnotVector::KnotVector(std::vector<double> knots, unsigned degree)
    : knots_(std::move(knots)), degree_(degree) {
    if (knots_.size() < static_cast<std::size_t>(degree_) + 2) {
        throw std::invalid_argument("knot vector needs at least degree + 2 knots");
    }
    for (std::size_t i = 1; i < knots_.size(); ++i) {
        if (knots_[i] < knots_[i - 1]) throw std::invalid_argument("knots must be non-decreasing");
    }
}

KnotVector KnotVector::uniform(std::size_t count, unsigned degree, double lo, double hi) {
    if (count < 2) throw std::invalid_argument("uniform knot vector needs at least two knots");
    std::vector<double> k(count);
    for (std::size_t i = 0; i < count; ++i) {
        k[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    k.back() = hi;
    return KnotVector(std::move(k), degree);
}

namespace {

double basis_recursive(std::span<const double> t, std::size_t i, unsigned d, double x) {
    if (d == 0) {
        if (t[i] <= x && x < t[i + 1]) return 1.0;
        // Close the last non-empty interval at the final knot.
        if (x == t.back() && t[i] < t[i + 1] && t[i + 1] == t.back()) return 1.0;
        return 0.0;
    }
    double value = 0.0;
    const double left_den = t[i + d] - t[i];
    if (left_den != 0.0) value += (x - t[i]) / left_den * basis_recursive(t, i, d - 1, x);
    const double right_den = t[i + d + 1] - t[i + 1];
    if (right_den != 0.0) {
        value += (t[i + d + 1] - x) / right_den * basis_recursive(t, i + 1, d - 1, x);
    }
    return value;
}

}  // namespace

double basis_value(const KnotVector& knots, std::size_t i, unsigned degree, double x) {
    if (knots.size() < static_cast<std::size_t>(degree) + 2 ||
        i >= knots.size() - degree - 1) {
        throw std::out_of_range("basis index out of range");
    }
    return basis_recursive(knots.knots(), i, degree, x);
}

DesignMatrix design_matrix_general(const KnotVector& knots, std::span<const double> points) {
    const std::size_t k = knots.basis_count();
    if (points.size() != k) {
        throw std::invalid_argument("design matrix must be square: point count must equal T - d - 1");
    }
    DesignMatrix out{Matrix(k, k), std::vector<double>(points.begin(), points.end()), knots,
                     DesignForm::General};
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t i = 0; i < k; ++i) {
            out.entries(r, i) = basis_value(knots, i, knots.degree(), points[r]);
        }
    }
    return out;
}

DesignMatrix design_matrix_d1(std::span<const double> points) {
    const std::size_t k = points.size();
    if (k < 2) throw std::invalid_argument("degree-1 system needs at least two points");
    DesignMatrix out{Matrix(k, k), std::vector<double>(points.begin(), points.end()),
                     KnotVector::uniform(k + 2, 1), DesignForm::D1Explicit};
    out.entries(0, 0) = 1.0;
    out.entries(k - 1, k - 1) = 1.0;
    for (std::size_t r = 1; r + 1 < k; ++r) {
        out.entries(r, r) = 1.0 - points[r];
        out.entries(r, r + 1) = points[r];
    }
    return out;
}

std::vector<double> d1_evaluation_points(const KnotVector& knots, std::span<const double> fractions) {
    const std::size_t k = fractions.size();
    if (knots.degree() != 1 || knots.size() != k + 2) {
        throw std::invalid_argument("expected degree-1 knots with T = K + 2");
    }
    std::vector<double> u(k);
    u[0] = knots[1];
    for (std::size_t r = 1; r + 1 < k; ++r) {
        u[r] = knots[r + 1] + fractions[r] * (knots[r + 2] - knots[r + 1]);
    }
    u[k - 1] = knots[k];
    return u;
}

DesignMatrix hermitian_dilation(const DesignMatrix& s) {
    if (!s.entries.square()) throw std::invalid_argument("dilation needs a square matrix");
    const std::size_t k = s.size();
    DesignMatrix out{Matrix(2 * k, 2 * k), s.points, s.knots, DesignForm::Dilated};
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            out.entries(r, k + c) = s.entries(r, c);
            out.entries(k + c, r) = s.entries(r, c);
        }
    }
    return out;
}

std::vector<double> greville_points(const KnotVector& knots) {
    const std::size_t k = knots.basis_count();
    const unsigned d = knots.degree();
    std::vector<double> pts(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (d == 0) {
            pts[i] = 0.5 * (knots[i] + knots[i + 1]);
        } else {
            double sum = 0.0;
            for (unsigned j = 1; j <= d; ++j) sum += knots[i + j];
            pts[i] = sum / d;
        }
    }
    return pts;
}

}  // namespace qspline
