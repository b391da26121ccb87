#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gff/complex_core.hpp"
#include "gff/gabor.hpp"

namespace gff {

// Subspace of C^N stored as a matrix whose rows are an orthonormal basis.
struct Subspace {
    std::size_t ambient_dim = 0;
    ComplexMatrix basis;  // dim x N, rows orthonormal

    std::size_t dim() const { return basis.rows; }
};

struct FusionFrame {
    std::vector<Subspace> subspaces;
    std::vector<double> weights;  // positive, default 1

    std::size_t ambient_dim() const {
        return subspaces.empty() ? 0 : subspaces.front().ambient_dim;
    }
};

// Fusion frame generated by time-frequency shifts of a window stack.
struct GaborFusionFrame {
    FusionFrame frame;            // subspaces in row-major (k,l) order
    ComplexMatrix window_stack;   // N x N, first M rows are the windows
    std::size_t window_count = 0; // M
    std::vector<LatticePoint> lattice;
    double declared_B = 1.0;      // tightness constant of the rows on their span
    double tight_constant = 0.0;  // N ||Y||_F^2 / B
};

struct HypothesisError : std::runtime_error {
    std::string hypothesis;
    std::size_t index;
    HypothesisError(std::string hyp, std::size_t idx, const std::string& msg)
        : std::runtime_error(msg), hypothesis(std::move(hyp)), index(idx) {}
};

// Modified Gram-Schmidt with re-orthogonalization; vectors with residual
// norm below drop_tol are discarded.
Subspace orthonormalize(const std::vector<ComplexVector>& vectors,
                        double drop_tol = 1e-10);

// P = basis^* basis, the N x N orthogonal projection onto the subspace.
ComplexMatrix projection(const Subspace& w);

// {nu_i ||P_i x||} in subspace order.
std::vector<double> fusion_analysis(const ComplexVector& x, const FusionFrame& f);

// Extreme eigenvalues of sum nu_i^2 P_i.  A == 0 means not spanning.
std::pair<double, double> frame_bounds(const FusionFrame& f);

ComplexMatrix fusion_frame_operator(const FusionFrame& f);
ComplexMatrix fusion_frame_operator_serial(const FusionFrame& f);

// Returns the tight constant A = sum nu_i^2 dim(W_i) / N if the weighted
// projection sum equals A*I within tol*A*sqrt(N), else nothing.
std::optional<double> is_tight(const FusionFrame& f, double tol = 1e-8);

// Tight fusion frame from coisometries applied to a seed frame sequence.
// Preconditions (each verified numerically at tolerance 1e-8):
//   - the seeds are a B-tight frame for their span,
//   - every U_i is a coisometry (U_i U_i^* = I) acting isometrically
//     backwards on its subspace,
//   - for each seed j, {U_i seed_j}_i is tight for C^N.
FusionFrame build_from_coisometries(const std::vector<ComplexVector>& seeds,
                                    const std::vector<ComplexMatrix>& coisometries,
                                    double B, double tol = 1e-8);

// W_{k,l} = span{pi(k,l) y_j} over the full lattice; rows of Y must be a
// B-tight frame for their span.  Tight constant N ||Y||_F^2 / B.
GaborFusionFrame build_gabor_fusion(const ComplexMatrix& Y, double B,
                                    double tol = 1e-8);
GaborFusionFrame build_gabor_fusion_serial(const ComplexMatrix& Y, double B,
                                           double tol = 1e-8);

}  // namespace gff
