#pragma once

// Statevector update kernels.
//
// Amplitude index bit q holds qubit q (little-endian). Every kernel exists twice:
// `serial::` is the straightforward reference used by the tests, `omp::` splits the
// outer loop across OpenMP threads once the vector is large enough to pay for it.
// The gate kernels produce bitwise-identical results in both versions since each
// output amplitude is written by exactly one iteration. The reductions sum fixed
// chunks in index order and agree with the serial versions to rounding.

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace qspline::kernels {

using Complex = std::complex<double>;
using Matrix2 = std::array<Complex, 4>;   // row-major
using Matrix4 = std::array<Complex, 16>;  // row-major, local index 2*bit(t0) + bit(t1)

/// Below this many amplitudes the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

namespace serial {

/// Applies `m` to qubit `target` on amplitudes whose bits under `ctrl_mask` equal `ctrl_value`.
void apply_1q(std::span<Complex> amps, const Matrix2& m, unsigned target,
              std::uint64_t ctrl_mask = 0, std::uint64_t ctrl_value = 0);

void apply_2q(std::span<Complex> amps, const Matrix4& m, unsigned t0, unsigned t1,
              std::uint64_t ctrl_mask = 0, std::uint64_t ctrl_value = 0);

double norm_squared(std::span<const Complex> amps);

/// sum_i conj(a_i) b_i
Complex inner(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace serial

namespace omp {

void apply_1q(std::span<Complex> amps, const Matrix2& m, unsigned target,
              std::uint64_t ctrl_mask = 0, std::uint64_t ctrl_value = 0);

void apply_2q(std::span<Complex> amps, const Matrix4& m, unsigned t0, unsigned t1,
              std::uint64_t ctrl_mask = 0, std::uint64_t ctrl_value = 0);

double norm_squared(std::span<const Complex> amps);

Complex inner(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace omp

}  // namespace qspline::kernels
