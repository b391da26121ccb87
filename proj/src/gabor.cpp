#include "gff/gabor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gff {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

void require_nonzero_window(const ComplexVector& phi) {
    if (norm_sq(phi) == 0.0) throw std::invalid_argument("zero window");
}
}  // namespace

std::vector<LatticePoint> full_lattice(std::size_t n) {
    std::vector<LatticePoint> out;
    out.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out.emplace_back(k, l);
    return out;
}

ComplexVector translate(const ComplexVector& x, std::size_t k) {
    const std::size_t n = x.size();
    ComplexVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[(i + k) % n] = x[i];
    return out;
}

ComplexVector modulate(const ComplexVector& x, std::size_t l) {
    const std::size_t n = x.size();
    ComplexVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double angle = -two_pi * static_cast<double>(l) * static_cast<double>(i) /
                             static_cast<double>(n);
        out[i] = x[i] * cplx(std::cos(angle), std::sin(angle));
    }
    return out;
}

ComplexVector tf_shift(const ComplexVector& x, std::size_t k, std::size_t l) {
    return modulate(translate(x, k), l);
}

ComplexMatrix stft(const ComplexVector& x, const ComplexVector& phi) {
    if (x.size() != phi.size()) throw DimensionError("stft: length mismatch");
    require_nonzero_window(phi);
    const std::size_t n = x.size();
    ComplexMatrix V(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const ComplexVector shifted = translate(phi, k);
        for (std::size_t l = 0; l < n; ++l) V(k, l) = inner(x, modulate(shifted, l));
    }
    return V;
}

ComplexVector stft_inverse(const ComplexMatrix& V, const ComplexVector& phi) {
    require_nonzero_window(phi);
    const std::size_t n = phi.size();
    if (V.rows != n || V.cols != n) throw DimensionError("stft_inverse: V must be N x N");
    ComplexVector x(n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const ComplexVector atom = tf_shift(phi, k, l);
            for (std::size_t i = 0; i < n; ++i) x[i] += V(k, l) * atom[i];
        }
    const double c = 1.0 / (static_cast<double>(n) * norm_sq(phi));
    for (cplx& v : x) v *= c;
    return x;
}

ComplexMatrix gabor_frame_operator_serial(const ComplexVector& phi) {
    const std::size_t n = phi.size();
    ComplexMatrix S(n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const ComplexVector atom = tf_shift(phi, k, l);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    S(i, j) += atom[i] * std::conj(atom[j]);
        }
    return S;
}

ComplexMatrix gabor_frame_operator(const ComplexVector& phi) {
    const std::size_t n = phi.size();
    ComplexMatrix S(n, n);
#ifdef _OPENMP
#pragma omp parallel
    {
        ComplexMatrix local(n, n);
#pragma omp for collapse(2) schedule(static)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t l = 0; l < n; ++l) {
                const ComplexVector atom = tf_shift(phi, k, l);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        local(i, j) += atom[i] * std::conj(atom[j]);
            }
#pragma omp critical
        for (std::size_t i = 0; i < S.data.size(); ++i) S.data[i] += local.data[i];
    }
    return S;
#else
    return gabor_frame_operator_serial(phi);
#endif
}

double gabor_frame_constant(const ComplexVector& phi, double tol) {
    require_nonzero_window(phi);
    const std::size_t n = phi.size();
    const ComplexMatrix S = gabor_frame_operator(phi);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += S(i, i).real();
    const double a = trace / static_cast<double>(n);
    const ComplexMatrix dev = sub(S, scale(ComplexMatrix::identity(n), a));
    if (frobenius_norm(dev) > tol * a * std::sqrt(static_cast<double>(n)))
        throw std::runtime_error("gabor_frame_constant: frame operator is not scalar");
    return a;
}

}  // namespace gff
