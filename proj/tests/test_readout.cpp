#include "qspline/readout.hpp"

#include <gtest/gtest.h>

#include "qspline/bspline.hpp"
#include "qspline/functions.hpp"
#include "qspline/oracle.hpp"
#include "qspline/vqls.hpp"
#include "test_util.hpp"

using namespace qspline;
using namespace qspline::testing;

namespace {

struct Fixture {
    DesignMatrix s;
    std::vector<double> y_norm;
    std::vector<double> beta;
};

Fixture sigmoid_system(std::size_t k) {
    const auto fn = TargetFunction::standard(FunctionKind::Sigmoid);
    std::vector<double> raw;
    const auto x = sample_grid(k);
    for (double t : x) raw.push_back(fn.to_raw(t));
    const auto y = normalized(target_values(fn, raw).values);
    auto s = design_matrix_d1(x);
    auto beta = solve_exact(s, y).beta;
    return {std::move(s), y, std::move(beta)};
}

QuantumState negate(const QuantumState& s) {
    std::vector<Complex> a(s.amplitudes().begin(), s.amplitudes().end());
    for (auto& v : a) v = -v;
    return QuantumState::from_amplitudes(std::move(a));
}

}  // namespace

TEST(EncodeRow, ReproducesRawRow) {
    const auto f = sigmoid_system(8);
    for (std::size_t k = 0; k < 8; ++k) {
        const auto r = encode_row(f.s.entries, k);
        for (std::size_t i = 0; i < 8; ++i) {
            EXPECT_NEAR(r.encoded.state[i].real() * r.norm, f.s.entries(k, i), 1e-10);
        }
    }
    EXPECT_THROW(encode_row(f.s.entries, 8), std::out_of_range);
}

TEST(RowOverlap, TrivialCases) {
    const Matrix s = Matrix::identity(4);
    EXPECT_NEAR(row_overlap(s, 0, QuantumState::basis(2, 0), ExactMode{}), 1.0, 1e-15);
    EXPECT_NEAR(row_overlap(s, 1, QuantumState::basis(2, 0), ExactMode{}), 0.0, 1e-15);
    EXPECT_NEAR(row_overlap(s, 0, QuantumState::basis(2, 0), ShotsMode{1000, 1}), 1.0, 1e-15);
}

TEST(RowOverlap, OracleBetaMatchesMatrixVectorProduct) {
    const auto f = sigmoid_system(4);
    const auto beta_state = amplitude_encode(f.beta).state;
    const auto sb = f.s.entries.apply(f.beta);
    const double bn = norm2(f.beta);
    for (std::size_t k = 0; k < 4; ++k) {
        const double row_norm = norm2(f.s.entries.row(k));
        EXPECT_NEAR(row_overlap(f.s.entries, k, beta_state, ExactMode{}), sb[k] / row_norm / bn, 1e-10);
    }
}

TEST(RowOverlap, ShotsWithinFourSigma) {
    const auto f = sigmoid_system(16);
    const auto beta_state = amplitude_encode(f.beta).state;
    const std::uint64_t shots = 1000000;
    for (std::size_t k : {1, 7, 14}) {
        const double exact = row_overlap(f.s.entries, k, beta_state, ExactMode{});
        const double est = row_overlap(f.s.entries, k, beta_state, ShotsMode{shots, 77 + k});
        const double sigma = std::sqrt((1 - exact * exact) / static_cast<double>(shots));
        EXPECT_LE(std::abs(est - exact), 4 * sigma) << "row " << k;
    }
}

TEST(RecoverEstimates, OracleRoundTripAndSignFlip) {
    for (std::size_t k : {4, 8, 16}) {
        const auto f = sigmoid_system(k);
        const auto beta_state = amplitude_encode(f.beta).state;
        const auto est = recover_estimates(f.s.entries, beta_state, f.y_norm, ExactMode{});
        for (std::size_t i = 0; i < k; ++i) EXPECT_NEAR(est.values[i], f.y_norm[i], 1e-8);
        const auto flipped = recover_estimates(f.s.entries, negate(beta_state), f.y_norm, ExactMode{});
        EXPECT_EQ(est.values, flipped.values);
        EXPECT_EQ(-est.sign, flipped.sign);
        for (std::size_t i = 0; i < k; ++i) {
            EXPECT_EQ(est.values[i], est.sign * est.scale * est.raw_overlaps[i]);
        }
    }
}

TEST(RecoverEstimates, ShotsSignFlipBitwise) {
    const auto f = sigmoid_system(4);
    const auto beta_state = amplitude_encode(f.beta).state;
    const ShotsMode mode{20000, 5};
    const auto a = recover_estimates(f.s.entries, beta_state, f.y_norm, mode);
    const auto b = recover_estimates(f.s.entries, negate(beta_state), f.y_norm, mode);
    EXPECT_EQ(a.values, b.values);
}

TEST(RecoverEstimates, SixteenKnotSigmoidVqls) {
    const auto f = sigmoid_system(16);
    const auto sol = solve(f.s, f.y_norm, SolveConfig{}, default_ansatz(4));
    const auto est = recover_estimates(f.s.entries, sol.beta_state, f.y_norm, ExactMode{});
    EXPECT_LE(nrmse(est.values, f.y_norm), 0.03);
}
