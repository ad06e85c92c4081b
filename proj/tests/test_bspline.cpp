#include "qspline/bspline.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "qspline/oracle.hpp"
#include "test_util.hpp"

using namespace qspline;
using namespace qspline::testing;

namespace {

// Closed-form uniform B-splines on integer knots, shifted to start at i.
double cardinal(unsigned d, double t) {
    switch (d) {
        case 0: return (t >= 0 && t < 1) ? 1.0 : 0.0;
        case 1: return (t >= 0 && t < 1) ? t : (t >= 1 && t < 2) ? 2 - t : 0.0;
        case 2:
            if (t >= 0 && t < 1) return t * t / 2;
            if (t >= 1 && t < 2) return (-2 * t * t + 6 * t - 3) / 2;
            if (t >= 2 && t < 3) return (3 - t) * (3 - t) / 2;
            return 0.0;
    }
    return 0.0;
}

}  // namespace

TEST(KnotVectorTest, Validation) {
    EXPECT_THROW(KnotVector({0.0, 1.0, 0.5}, 0), std::invalid_argument);
    EXPECT_THROW(KnotVector({0.0, 1.0}, 1), std::invalid_argument);
    const auto k = KnotVector::uniform(6, 1);
    EXPECT_EQ(k.basis_count(), 4U);
    EXPECT_DOUBLE_EQ(k[5], 1.0);
}

TEST(BasisValue, DegreeZeroIsIndicator) {
    const auto k = KnotVector::uniform(5, 0);  // 0, .25, .5, .75, 1
    EXPECT_EQ(basis_value(k, 1, 0, 0.3), 1.0);
    EXPECT_EQ(basis_value(k, 1, 0, 0.5), 0.0);
    EXPECT_EQ(basis_value(k, 1, 0, 0.25), 1.0);
    EXPECT_EQ(basis_value(k, 3, 0, 1.0), 1.0);  // last interval closed
}

TEST(BasisValue, HatPeaksAtCenter) {
    const auto k = KnotVector::uniform(6, 1);
    for (std::size_t i = 0; i < k.basis_count(); ++i) EXPECT_NEAR(basis_value(k, i, 1, k[i + 1]), 1.0, 1e-15);
}

TEST(BasisValue, OutOfRangeIndexThrows) {
    const auto k = KnotVector::uniform(6, 1);
    EXPECT_THROW(basis_value(k, 4, 1, 0.5), std::out_of_range);
}

TEST(BasisValue, MatchesClosedFormUniformSplines) {
    Rng rng(31);
    for (unsigned d = 0; d <= 2; ++d) {
        const auto k = KnotVector::uniform(11, d, 0.0, 10.0);  // integer knots 0..10
        for (int trial = 0; trial < 200; ++trial) {
            const double x = rng.uniform(0.0, 10.0);
            for (std::size_t i = 0; i < k.basis_count(); ++i) {
                EXPECT_NEAR(basis_value(k, i, d, x), cardinal(d, x - static_cast<double>(i)), 1e-12);
            }
        }
    }
}

TEST(BasisValue, PartitionNonNegativityLocalSupport) {
    Rng rng(32);
    for (unsigned d = 0; d <= 2; ++d) {
        const auto k = KnotVector::uniform(12, d);
        const double lo = k[d];
        const double hi = k[k.size() - d - 1];
        for (int trial = 0; trial < 50; ++trial) {
            const double x = rng.uniform(lo, hi);
            double sum = 0.0;
            for (std::size_t i = 0; i < k.basis_count(); ++i) {
                const double b = basis_value(k, i, d, x);
                EXPECT_GE(b, 0.0);
                if (x < k[i] || x >= k[i + d + 1]) EXPECT_EQ(b, 0.0);
                sum += b;
            }
            EXPECT_NEAR(sum, 1.0, 1e-12);
        }
    }
}

TEST(BasisValue, QuadraticPartitionWithNonUniformKnots) {
    const KnotVector k({0.0, 0.1, 0.15, 0.4, 0.7, 0.71, 0.9, 1.0}, 2);
    Rng rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        const double x = rng.uniform(k[2], k[5]);
        double sum = 0.0;
        for (std::size_t i = 0; i < k.basis_count(); ++i) sum += basis_value(k, i, 2, x);
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(DesignMatrixD1, TwoPointsIsIdentity) {
    const std::vector<double> x = {0.0, 1.0};
    EXPECT_EQ(design_matrix_d1(x).entries, Matrix::identity(2));
}

TEST(DesignMatrixD1, FourPointRows) {
    const std::vector<double> x = {0.0, 0.25, 0.5, 1.0};
    const auto s = design_matrix_d1(x);
    const double expected[4][4] = {{1, 0, 0, 0}, {0, 0.75, 0.25, 0}, {0, 0, 0.5, 0.5}, {0, 0, 0, 1}};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) EXPECT_DOUBLE_EQ(s.entries(r, c), expected[r][c]);
    }
    EXPECT_EQ(s.form, DesignForm::D1Explicit);
    EXPECT_TRUE(is_upper_bidiagonal(s.entries));
}

TEST(DesignMatrixGeneral, HatMatrixIsBandedAndStochastic) {
    const auto k = KnotVector::uniform(10, 1);
    const auto pts = greville_points(k);
    Rng rng(34);
    std::vector<double> jittered = pts;
    for (std::size_t i = 1; i + 1 < jittered.size(); ++i) jittered[i] += rng.uniform(-0.02, 0.02);
    const auto s = design_matrix_general(k, jittered);
    for (std::size_t r = 0; r < s.size(); ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < s.size(); ++c) {
            const double direct = basis_value(k, c, 1, jittered[r]);
            EXPECT_EQ(s.entries(r, c), direct);
            if (c + 1 < r || c > r + 1) EXPECT_EQ(s.entries(r, c), 0.0);
            sum += s.entries(r, c);
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
    }
}

TEST(DesignMatrixGeneral, MatchedPointsReproduceExplicitForm) {
    Rng rng(35);
    for (std::size_t kk : {2, 4, 8, 16}) {
        std::vector<double> x(kk);
        x[0] = 0.0;
        x[kk - 1] = 1.0;
        for (std::size_t i = 1; i + 1 < kk; ++i) x[i] = rng.uniform();
        const auto knots = KnotVector::uniform(kk + 2, 1);
        const auto general = design_matrix_general(knots, d1_evaluation_points(knots, x));
        EXPECT_LE(max_abs_diff(general.entries, design_matrix_d1(x).entries), 1e-12) << "K=" << kk;
    }
}

TEST(DesignMatrixGeneral, RejectsNonSquare) {
    const auto k = KnotVector::uniform(6, 1);
    const std::vector<double> three = {0.1, 0.5, 0.9};
    EXPECT_THROW(design_matrix_general(k, three), std::invalid_argument);
}

TEST(HermitianDilation, IdentityAndSymmetry) {
    const std::vector<double> x = {0.0, 1.0};
    const auto h = hermitian_dilation(design_matrix_d1(x));
    ASSERT_EQ(h.size(), 4U);
    EXPECT_EQ(h.form, DesignForm::Dilated);
    EXPECT_EQ(h.entries(0, 2), 1.0);
    EXPECT_EQ(h.entries(3, 1), 1.0);
    EXPECT_EQ(h.entries(0, 0), 0.0);

    Rng rng(36);
    DesignMatrix s{random_matrix(rng, 4, 4), {}, std::nullopt, DesignForm::General};
    const auto hr = hermitian_dilation(s);
    EXPECT_LT(max_abs_diff(hr.entries, hr.entries.transpose()), 1e-15);
}

TEST(GrevillePoints, DegreeZeroMidpoints) {
    const auto g = greville_points(KnotVector::uniform(3, 0));
    ASSERT_EQ(g.size(), 2U);
    EXPECT_DOUBLE_EQ(g[0], 0.25);
    EXPECT_DOUBLE_EQ(g[1], 0.75);
}

TEST(GrevillePoints, GeneralMatrixNonsingular) {
    for (unsigned d = 0; d <= 3; ++d) {
        const auto k = KnotVector::uniform(16 + d + 1, d);
        const auto s = design_matrix_general(k, greville_points(k));
        EXPECT_GT(min_pivot(s.entries), 1e-6) << "d=" << d;
    }
}
