#include "gff/phase_retrieval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eigen_bridge.hpp"
#include "gff/circulant.hpp"

namespace gff {

PhaseClass canonicalize(const ComplexVector& x) {
    std::size_t pivot = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double a = std::abs(x[i]);
        if (a > best) {
            best = a;
            pivot = i;
        }
    }
    PhaseClass out;
    out.representative = x;
    if (best > 0.0) {
        const cplx phase = std::conj(x[pivot]) / best;
        for (cplx& v : out.representative) v *= phase;
        out.representative[pivot] = best;  // exact real pivot
    }
    return out;
}

MeasurementSet measure(const ComplexVector& x, const FusionFrame& f) {
    MeasurementSet m;
    m.ambient_dim = x.size();
    m.values = fusion_analysis(x, f);
    return m;
}

double mod_phase_distance(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size()) throw DimensionError("mod_phase_distance: length mismatch");
    const double s = norm_sq(x) + norm_sq(y) - 2.0 * std::abs(inner(x, y));
    return std::sqrt(std::max(s, 0.0));
}

bool divisibility_condition(std::size_t N, std::size_t n0) {
    return !is_singular_binary(N, n0);
}

namespace {

// Rows of the real-linear lifted measurement map: entry (i, a) is tr(P_i B_a)
// over the orthonormal Hermitian basis {E_ii} u {(E_ij+E_ji)/sqrt2, i(E_ij-E_ji)/sqrt2}.
Eigen::MatrixXd lifted_map(const FusionFrame& f) {
    const std::size_t n = f.ambient_dim();
    const std::size_t dim = n * n;
    const std::size_t count = f.subspaces.size();
    const double sqrt2 = std::sqrt(2.0);
    Eigen::MatrixXd A(count, dim);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::size_t s = 0; s < count; ++s) {
        const ComplexMatrix P = projection(f.subspaces[s]);
        const double nu = s < f.weights.size() ? f.weights[s] : 1.0;
        std::size_t a = 0;
        for (std::size_t i = 0; i < n; ++i) A(s, a++) = nu * nu * P(i, i).real();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                A(s, a++) = nu * nu * sqrt2 * P(i, j).real();
                A(s, a++) = nu * nu * sqrt2 * P(i, j).imag();
            }
    }
    return A;
}

// Rebuilds the Hermitian matrix from its coordinates in the same basis.
Eigen::MatrixXcd hermitian_from_coords(const Eigen::VectorXd& h, std::size_t n) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd X(n, n);
    std::size_t a = 0;
    for (std::size_t i = 0; i < n; ++i) X(i, i) = h(a++);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double re = h(a++) * inv_sqrt2;
            const double im = h(a++) * inv_sqrt2;
            X(i, j) = cplx(re, im);
            X(j, i) = cplx(re, -im);
        }
    return X;
}

}  // namespace

CertificateReport injectivity_certificate(const FusionFrame& f) {
    const std::size_t n = f.ambient_dim();
    const Eigen::MatrixXd A = lifted_map(f);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    const auto& sv = svd.singularValues();
    std::size_t rank = 0;
    if (sv.size() > 0) {
        const double thresh = 1e-10 * sv(0);
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > thresh) ++rank;
    }
    CertificateReport rep;
    rep.rank = rank;
    rep.full_rank = n * n;
    rep.certified = rank == rep.full_rank;
    return rep;
}

MagnitudeRecovery recover_magnitudes(const MeasurementSet& m,
                                     const std::vector<double>& coeffs,
                                     std::size_t i0) {
    (void)i0;  // the support offset shifts v cyclically but not the system
    const std::size_t n = m.ambient_dim;
    if (m.values.size() != n * n)
        throw DimensionError("recover_magnitudes: full-lattice measurements required");
    const std::size_t n0 = coeffs.size();
    if (n0 == 0 || n0 > n) throw std::out_of_range("recover_magnitudes: bad support size");
    if (n0 > 1 && !divisibility_condition(n, n0))
        throw SingularCirculantError(n / std::gcd(n, n0));

    // m^2_k = sum_i c_i v_{k+i}  <=>  m^2 = A v with A_{k,r} = c_{(r-k) mod N};
    // A is circulant with first column (c_0, 0, ..., 0, c_{n0-1}, ..., c_1).
    CirculantSpec spec;
    spec.first_column.assign(n, 0.0);
    spec.first_column[0] = coeffs[0];
    for (std::size_t i = 1; i < n0; ++i) spec.first_column[n - i] = coeffs[i];

    double scale = 1.0;
    for (double v : m.values) scale = std::max(scale, v * v);

    MagnitudeRecovery out;
    out.values.assign(n * n, 0.0);
    for (std::size_t l = 0; l < n; ++l) {
        ComplexVector rhs(n);
        for (std::size_t k = 0; k < n; ++k) rhs[k] = m.values[k * n + l] * m.values[k * n + l];
        const ComplexVector v = solve(spec, rhs);
        for (std::size_t k = 0; k < n; ++k) {
            const double val = v[k].real();
            if (val < -1e-6 * scale)
                throw ModelMismatchError("recover_magnitudes: negative magnitude " +
                                         std::to_string(val) + " exceeds clamp threshold");
            if (val < 0.0) out.max_clamp = std::max(out.max_clamp, -val);
            out.values[k * n + l] = std::max(val, 0.0);
        }
    }
    return out;
}

ReconstructionResult reconstruct(const MeasurementSet& m, const FusionFrame& f,
                                 double residual_tol) {
    const std::size_t n = f.ambient_dim();
    if (m.ambient_dim != n || m.values.size() != f.subspaces.size())
        throw DimensionError("reconstruct: measurement/frame mismatch");

    const CertificateReport cert = injectivity_certificate(f);
    if (!cert.certified)
        throw UncertifiedFrameError("reconstruct: frame not certified injective (rank " +
                                    std::to_string(cert.rank) + "/" +
                                    std::to_string(cert.full_rank) + ")");

    Eigen::VectorXd b(m.values.size());
    for (std::size_t i = 0; i < m.values.size(); ++i) b(i) = m.values[i] * m.values[i];

    const Eigen::MatrixXd A = lifted_map(f);
    const Eigen::VectorXd h = A.colPivHouseholderQr().solve(b);
    const Eigen::MatrixXcd X = hermitian_from_coords(h, n);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(X);
    const auto& ev = es.eigenvalues();
    const double l1 = ev(ev.size() - 1);
    const double l2 = ev.size() > 1 ? std::abs(ev(ev.size() - 2)) : 0.0;

    ReconstructionResult out;
    if (l1 <= 0.0) {
        out.estimate.representative.assign(n, 0.0);
        out.rank_one_ratio = 0.0;
    } else {
        ComplexVector xhat(n);
        const auto u = es.eigenvectors().col(ev.size() - 1);
        const double s = std::sqrt(l1);
        for (std::size_t i = 0; i < n; ++i) xhat[i] = s * u(static_cast<Eigen::Index>(i));
        out.estimate = canonicalize(xhat);
        out.rank_one_ratio = l2 / l1;
    }
    out.far_from_rank_one = out.rank_one_ratio > 0.5;

    // residual test against the re-measured estimate
    const std::vector<double> remeasured = fusion_analysis(out.estimate.representative, f);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        const double d = remeasured[i] * remeasured[i] - b(i);
        num += d * d;
        den += b(i) * b(i);
    }
    out.residual = std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
    if (den == 0.0) out.residual = std::sqrt(num);
    if (out.residual > residual_tol) throw InconsistentMeasurementsError(out.residual);
    return out;
}

}  // namespace gff
