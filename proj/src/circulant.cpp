#include "gff/circulant.hpp"

#include <cmath>
#include <numbers>

namespace gff {

ComplexMatrix realize(const CirculantSpec& spec) {
    const std::size_t n = spec.dim();
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = spec.first_column[(r + n - c) % n];
    return out;
}

cplx determinant(const CirculantSpec& spec) {
    const std::size_t n = spec.dim();
    cplx det = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        const cplx wj(std::cos(angle), std::sin(angle));
        cplx factor = 0.0;
        cplx power = 1.0;
        for (std::size_t k = 0; k < n; ++k) {
            factor += spec.first_column[k] * power;
            power *= wj;
        }
        det *= factor;
    }
    return det;
}

bool is_singular_binary(std::size_t N, std::size_t n) {
    if (n == 0 || n >= N) throw std::out_of_range("is_singular_binary: need 0 < n < N");
    for (std::size_t j = 1; j < N; ++j)
        if ((j * n) % N == 0) return true;
    return false;
}

CirculantSpec binary_spec(std::size_t N, std::size_t n) {
    if (n == 0 || n >= N) throw std::out_of_range("binary_spec: need 0 < n < N");
    CirculantSpec spec;
    spec.first_column.assign(N, 0.0);
    for (std::size_t k = 0; k < n; ++k) spec.first_column[k] = 1.0;
    return spec;
}

ComplexVector solve(const CirculantSpec& spec, const ComplexVector& b) {
    const std::size_t n = spec.dim();
    if (b.size() != n) throw DimensionError("circulant solve: dimension mismatch");

    // Eigenvalues are the DFT of the first column; bin m is the determinant
    // factor at w_{(N-m) mod N}.
    const ComplexVector lambda = dft(spec.first_column);
    double l1 = 0.0;
    for (const cplx& c : spec.first_column) l1 += std::abs(c);
    const double threshold = 1e-12 * std::max(1.0, l1);

    ComplexVector bhat = dft(b);
    for (std::size_t m = 0; m < n; ++m) {
        if (std::abs(lambda[m]) <= threshold)
            throw SingularCirculantError((n - m) % n);
        bhat[m] /= lambda[m];
    }
    return idft(bhat);
}

}  // namespace gff
