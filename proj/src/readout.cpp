#include "qspline/readout.hpp"

#include <cmath>
#include <stdexcept>

#include "qspline/rng.hpp"

namespace qspline {

RowEncoding encode_row(const Matrix& s, std::size_t k) {
    if (k >= s.rows()) throw std::out_of_range("row index out of range");
    std::vector<double> raw(s.row(k).begin(), s.row(k).end());
    const double n = norm2(raw);
    if (!(n > 0.0)) throw std::domain_error("cannot encode a zero row");
    auto encoded = amplitude_encode(std::span<const double>(raw));
    return {k, std::move(raw), n, std::move(encoded)};
}

double row_overlap(const Matrix& s, std::size_t k, const QuantumState& beta,
                   const EstimationMode& mode) {
    if (beta.dim() != s.cols()) throw std::invalid_argument("state and matrix dimensions differ");
    const RowEncoding row = encode_row(s, k);
    if (std::holds_alternative<ShotsMode>(mode)) {
        const auto beta_prep = amplitude_encode(std::span<const double>(beta.real_amplitudes()));
        return hadamard_test(row.encoded.circuit, beta_prep.circuit, beta.n_qubits(), mode);
    }
    const Complex ov = inner_product(row.encoded.state, beta);
    if (std::abs(ov.imag()) > 1e-8) throw std::domain_error("overlap has an imaginary part");
    return ov.real();
}

EstimateVector recover_estimates(const Matrix& s, const QuantumState& beta,
                                 std::span<const double> y_norm, const EstimationMode& mode) {
    const std::size_t k = s.rows();
    if (y_norm.size() != k) throw std::invalid_argument("target length mismatch");
    const auto b = beta.real_amplitudes();
    const auto sb = s.apply(b);
    const double sb_norm = norm2(sb);
    if (sb_norm < 1e-12) throw std::domain_error("||S β'|| is degenerate");

    EstimateVector out;
    out.scale = 1.0 / sb_norm;
    out.sign = dot(y_norm, sb) < 0.0 ? -1 : 1;
    out.raw_overlaps.resize(k);
    out.values.resize(k);

    // Estimate against the sign-corrected state so that β' and -β' give the same
    // measurement statistics, not just the same expectation.
    std::vector<Complex> amps(beta.amplitudes().begin(), beta.amplitudes().end());
    if (out.sign < 0) {
        for (auto& a : amps) a = -a;
    }
    const QuantumState aligned = QuantumState::from_amplitudes(std::move(amps));
    const double sign = static_cast<double>(out.sign);

    const auto* shots = std::get_if<ShotsMode>(&mode);
    for (std::size_t r = 0; r < k; ++r) {
        const double row_norm = norm2(s.row(r));
        EstimationMode row_mode = mode;
        if (shots) row_mode = ShotsMode{shots->shots, derive_seed(shots->seed, r)};
        const double aligned_overlap = row_norm * row_overlap(s, r, aligned, row_mode);
        out.raw_overlaps[r] = sign * aligned_overlap;
        out.values[r] = out.scale * aligned_overlap;
    }
    return out;
}

}  // namespace qspline
