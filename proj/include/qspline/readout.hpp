#pragma once

// Inner-product readout: ŷ_k from the overlap of |β'> with the normalized k-th row of S.

#include <span>
#include <vector>

#include "qspline/matrix.hpp"
#include "qspline/statevector.hpp"

namespace qspline {

struct RowEncoding {
    std::size_t k;  // zero-based row index
    std::vector<double> raw;
    double norm;
    EncodedState encoded;
};

RowEncoding encode_row(const Matrix& s, std::size_t k);

/// Re <row_k / ||row_k|| | β'>. Exact mode uses the dot product; shots mode runs a
/// Hadamard test between the amplitude-encoding circuits of the two states.
double row_overlap(const Matrix& s, std::size_t k, const QuantumState& beta,
                   const EstimationMode& mode);

struct EstimateVector {
    std::vector<double> values;
    /// ||row_k|| * overlap_k, i.e. (S β')_k up to estimation error.
    std::vector<double> raw_overlaps;
    /// 1 / ||S β'||, computed classically.
    double scale;
    /// sign(<y_norm, S β'>), fixes the global sign of β'.
    int sign;
};

/// ŷ_k = sign * scale * ||row_k|| * overlap_k, an estimate of the unit-norm targets.
EstimateVector recover_estimates(const Matrix& s, const QuantumState& beta,
                                 std::span<const double> y_norm, const EstimationMode& mode);

}  // namespace qspline
