#include "qspline/kernels.hpp"

#include <algorithm>
#include <vector>

namespace qspline::kernels {

namespace {

// Inserts a zero bit at position `pos` of `i`.
inline std::uint64_t insert_zero(std::uint64_t i, unsigned pos) {
    const std::uint64_t low = (std::uint64_t{1} << pos) - 1;
    return ((i & ~low) << 1) | (i & low);
}

inline void update_pair(std::span<Complex> amps, const Matrix2& m, std::uint64_t i0,
                        std::uint64_t i1) {
    const Complex a0 = amps[i0];
    const Complex a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
}

inline void update_quad(std::span<Complex> amps, const Matrix4& m, std::uint64_t base,
                        std::uint64_t bit0, std::uint64_t bit1) {
    const std::uint64_t idx[4] = {base, base | bit1, base | bit0, base | bit0 | bit1};
    Complex in[4];
    for (int r = 0; r < 4; ++r) in[r] = amps[idx[r]];
    for (int r = 0; r < 4; ++r) {
        amps[idx[r]] = m[4 * r] * in[0] + m[4 * r + 1] * in[1] + m[4 * r + 2] * in[2] +
                       m[4 * r + 3] * in[3];
    }
}

inline std::uint64_t quad_base(std::uint64_t i, unsigned t0, unsigned t1) {
    const unsigned lo = t0 < t1 ? t0 : t1;
    const unsigned hi = t0 < t1 ? t1 : t0;
    return insert_zero(insert_zero(i, lo), hi);
}

}  // namespace

namespace serial {

void apply_1q(std::span<Complex> amps, const Matrix2& m, unsigned target,
              std::uint64_t ctrl_mask, std::uint64_t ctrl_value) {
    const std::uint64_t half = amps.size() / 2;
    const std::uint64_t bit = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero(i, target);
        if ((i0 & ctrl_mask) != ctrl_value) continue;
        update_pair(amps, m, i0, i0 | bit);
    }
}

void apply_2q(std::span<Complex> amps, const Matrix4& m, unsigned t0, unsigned t1,
              std::uint64_t ctrl_mask, std::uint64_t ctrl_value) {
    const std::uint64_t quarter = amps.size() / 4;
    const std::uint64_t bit0 = std::uint64_t{1} << t0;
    const std::uint64_t bit1 = std::uint64_t{1} << t1;
    for (std::uint64_t i = 0; i < quarter; ++i) {
        const std::uint64_t base = quad_base(i, t0, t1);
        if ((base & ctrl_mask) != ctrl_value) continue;
        update_quad(amps, m, base, bit0, bit1);
    }
}

double norm_squared(std::span<const Complex> amps) {
    double total = 0.0;
    for (const auto& a : amps) total += std::norm(a);
    return total;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    Complex total{};
    for (std::size_t i = 0; i < a.size(); ++i) total += std::conj(a[i]) * b[i];
    return total;
}

}  // namespace serial

namespace omp {

void apply_1q(std::span<Complex> amps, const Matrix2& m, unsigned target,
              std::uint64_t ctrl_mask, std::uint64_t ctrl_value) {
    if (amps.size() < kParallelThreshold) return serial::apply_1q(amps, m, target, ctrl_mask, ctrl_value);
    const std::int64_t half = static_cast<std::int64_t>(amps.size() / 2);
    const std::uint64_t bit = std::uint64_t{1} << target;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < half; ++i) {
        const std::uint64_t i0 = insert_zero(static_cast<std::uint64_t>(i), target);
        if ((i0 & ctrl_mask) != ctrl_value) continue;
        update_pair(amps, m, i0, i0 | bit);
    }
}

void apply_2q(std::span<Complex> amps, const Matrix4& m, unsigned t0, unsigned t1,
              std::uint64_t ctrl_mask, std::uint64_t ctrl_value) {
    if (amps.size() < kParallelThreshold) return serial::apply_2q(amps, m, t0, t1, ctrl_mask, ctrl_value);
    const std::int64_t quarter = static_cast<std::int64_t>(amps.size() / 4);
    const std::uint64_t bit0 = std::uint64_t{1} << t0;
    const std::uint64_t bit1 = std::uint64_t{1} << t1;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < quarter; ++i) {
        const std::uint64_t base = quad_base(static_cast<std::uint64_t>(i), t0, t1);
        if ((base & ctrl_mask) != ctrl_value) continue;
        update_quad(amps, m, base, bit0, bit1);
    }
}

// Reductions are split into fixed-size chunks summed in index order so the result
// does not depend on the thread count.
namespace {
constexpr std::size_t kChunk = 4096;
}

double norm_squared(std::span<const Complex> amps) {
    if (amps.size() < kParallelThreshold) return serial::norm_squared(amps);
    const std::int64_t chunks = static_cast<std::int64_t>((amps.size() + kChunk - 1) / kChunk);
    std::vector<double> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        const std::size_t len = std::min(kChunk, amps.size() - begin);
        partial[static_cast<std::size_t>(c)] = serial::norm_squared(amps.subspan(begin, len));
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() < kParallelThreshold) return serial::inner(a, b);
    const std::int64_t chunks = static_cast<std::int64_t>((a.size() + kChunk - 1) / kChunk);
    std::vector<Complex> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * kChunk;
        const std::size_t len = std::min(kChunk, a.size() - begin);
        partial[static_cast<std::size_t>(c)] =
            serial::inner(a.subspan(begin, len), b.subspan(begin, len));
    }
    Complex total{};
    for (const auto& p : partial) total += p;
    return total;
}

}  // namespace omp

}  // namespace qspline::kernels
