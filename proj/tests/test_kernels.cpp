#include "qspline/kernels.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "qspline/rng.hpp"

using namespace qspline;
using kernels::Complex;

namespace {

std::vector<Complex> random_amps(Rng& rng, std::size_t n) {
    std::vector<Complex> v(n);
    for (auto& a : v) a = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return v;
}

kernels::Matrix2 random_m2(Rng& rng) {
    kernels::Matrix2 m;
    for (auto& x : m) x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return m;
}

kernels::Matrix4 random_m4(Rng& rng) {
    kernels::Matrix4 m;
    for (auto& x : m) x = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    return m;
}

}  // namespace

// Sizes straddle kParallelThreshold so both branches of the OpenMP kernels run.
class KernelParity : public ::testing::TestWithParam<unsigned> {};

TEST_P(KernelParity, OneQubitMatchesSerialBitwise) {
    const unsigned n = GetParam();
    Rng rng(100 + n);
    for (unsigned target = 0; target < n; target += (n > 8 ? 5 : 1)) {
        auto a = random_amps(rng, std::size_t{1} << n);
        auto b = a;
        const auto m = random_m2(rng);
        const std::uint64_t mask = n > 1 ? (std::uint64_t{1} << ((target + 1) % n)) : 0;
        kernels::serial::apply_1q(a, m, target, mask, mask);
        kernels::omp::apply_1q(b, m, target, mask, mask);
        EXPECT_EQ(a, b);
    }
}

TEST_P(KernelParity, TwoQubitMatchesSerialBitwise) {
    const unsigned n = GetParam();
    if (n < 2) GTEST_SKIP();
    Rng rng(200 + n);
    auto a = random_amps(rng, std::size_t{1} << n);
    auto b = a;
    const auto m = random_m4(rng);
    kernels::serial::apply_2q(a, m, n - 1, 0);
    kernels::omp::apply_2q(b, m, n - 1, 0);
    EXPECT_EQ(a, b);
}

TEST_P(KernelParity, ReductionsAgree) {
    const unsigned n = GetParam();
    Rng rng(300 + n);
    const auto a = random_amps(rng, std::size_t{1} << n);
    const auto b = random_amps(rng, std::size_t{1} << n);
    const double scale = static_cast<double>(a.size());
    EXPECT_NEAR(kernels::serial::norm_squared(a), kernels::omp::norm_squared(a), 1e-12 * scale);
    EXPECT_LT(std::abs(kernels::serial::inner(a, b) - kernels::omp::inner(a, b)), 1e-12 * scale);
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelParity, ::testing::Values(1U, 3U, 5U, 13U, 15U, 16U));

TEST(Kernels, ControlledUpdateLeavesOtherBranchAlone) {
    // X on qubit 0 controlled by qubit 1 = 0 acting on |10> does nothing.
    std::vector<Complex> amps(4);
    amps[2] = 1.0;
    kernels::serial::apply_1q(amps, {0, 1, 1, 0}, 0, 0b10, 0b00);
    EXPECT_EQ(amps[2], Complex(1.0));
    kernels::serial::apply_1q(amps, {0, 1, 1, 0}, 0, 0b10, 0b10);
    EXPECT_EQ(amps[3], Complex(1.0));
    EXPECT_EQ(amps[2], Complex(0.0));
}

TEST(Kernels, TwoQubitLocalOrdering) {
    // CX with targets (control=1, target=0): |q1 q0> = |10> -> |11>.
    const kernels::Matrix4 cx = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0};
    std::vector<Complex> amps(4);
    amps[0b10] = 1.0;
    kernels::serial::apply_2q(amps, cx, 1, 0);
    EXPECT_EQ(amps[0b11], Complex(1.0));
}
