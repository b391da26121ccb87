#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gff/complex_core.hpp"
#include "gff/fusion.hpp"

namespace gff {

// Magnitudes ||P_i x|| in subspace order (unsquared; squared values are an
// internal representation, flagged when serialized).
struct MeasurementSet {
    std::size_t ambient_dim = 0;
    std::vector<double> values;
};

// Equivalence class {c x : |c| = 1}, stored via a canonical representative:
// the largest-modulus entry (lowest index on ties) is rotated real nonnegative.
struct PhaseClass {
    ComplexVector representative;
};

PhaseClass canonicalize(const ComplexVector& x);

struct CertificateReport {
    std::size_t rank = 0;
    std::size_t full_rank = 0;  // N^2
    bool certified = false;     // rank == N^2; rank < N^2 is inconclusive, not a refutation
};

struct UncertifiedFrameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentMeasurementsError : std::runtime_error {
    double residual;
    explicit InconsistentMeasurementsError(double r)
        : std::runtime_error("inconsistent measurements, relative residual " +
                             std::to_string(r)),
          residual(r) {}
};

struct ModelMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

MeasurementSet measure(const ComplexVector& x, const FusionFrame& f);

// min over |c|=1 of ||x - c y|| = sqrt(||x||^2 + ||y||^2 - 2 |<x,y>|).
double mod_phase_distance(const ComplexVector& x, const ComplexVector& y);

// True iff N does not divide j*n_0 for every 1 <= j <= N-1.
bool divisibility_condition(std::size_t N, std::size_t n0);

// Rank of the real-linear map taking a Hermitian matrix X to (tr(P_i X))_i.
CertificateReport injectivity_certificate(const FusionFrame& f);

struct MagnitudeRecovery {
    std::vector<double> values;  // v_{k,l} in row-major (k,l) order, clamped at 0
    double max_clamp = 0.0;      // largest negative excursion that was clamped
};

// Inverts the circulant relation m^2_{k,l} = sum_i c_i v_{(k+i) mod N, l}
// per modulation index l.  Requires full-lattice measurements and the
// divisibility condition on (N, |c|).
MagnitudeRecovery recover_magnitudes(const MeasurementSet& m,
                                     const std::vector<double>& coeffs,
                                     std::size_t i0);

struct ReconstructionResult {
    PhaseClass estimate;
    double residual = 0.0;            // relative re-measurement residual
    double rank_one_ratio = 0.0;      // lambda_2 / lambda_1 of the lifted solution
    bool far_from_rank_one = false;   // ratio > 0.5
};

// Lifted linear least squares for the Hermitian matrix X from
// {tr(P_i X) = m_i^2}, projected to the nearest PSD rank-one matrix.
ReconstructionResult reconstruct(const MeasurementSet& m, const FusionFrame& f,
                                 double residual_tol = 0.05);

}  // namespace gff
