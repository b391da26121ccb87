#include "gff/matrix_gabor.hpp"

#include <cmath>

#include "gff/gabor.hpp"

namespace gff {

namespace {
void require_square(const ComplexMatrix& X, const char* who) {
    if (X.rows != X.cols) throw DimensionError(std::string(who) + ": matrix must be square");
}

// Cyclic convolution of two length-N vectors.
ComplexVector cyclic_convolve(const ComplexVector& a, const ComplexVector& b) {
    const std::size_t n = a.size();
    ComplexVector out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[(i + j) % n] += a[i] * b[j];
    return out;
}
}  // namespace

ComplexMatrix tilde_translate(const ComplexMatrix& X, std::size_t l) {
    require_square(X, "tilde_translate");
    ComplexMatrix out(X.rows, X.cols);
    for (std::size_t i = 0; i < X.rows; ++i) out.set_row(i, translate(X.row(i), l));
    return out;
}

ComplexMatrix tilde_modulate(const ComplexMatrix& X, std::size_t l) {
    require_square(X, "tilde_modulate");
    ComplexMatrix out(X.rows, X.cols);
    for (std::size_t i = 0; i < X.rows; ++i) out.set_row(i, modulate(X.row(i), l));
    return out;
}

ComplexMatrix matrix_convolve(const ComplexMatrix& X, const ComplexMatrix& Y) {
    require_square(X, "matrix_convolve");
    if (Y.rows != X.rows || Y.cols != X.cols)
        throw DimensionError("matrix_convolve: shape mismatch");
    const std::size_t n = X.rows;
    ComplexMatrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        ComplexVector acc(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const ComplexVector c = cyclic_convolve(X.row(i), Y.row((j + n - i) % n));
            for (std::size_t m = 0; m < n; ++m) acc[m] += c[m];
        }
        out.set_row(j, acc);
    }
    return out;
}

ComplexMatrix matrix_involution(const ComplexMatrix& X) {
    const std::size_t n = X.cols;
    ComplexMatrix out(X.rows, n);
    for (std::size_t i = 0; i < X.rows; ++i)
        for (std::size_t l = 0; l < n; ++l)
            out(i, l) = std::conj(X(i, (n - l) % n));
    return out;
}

ComplexMatrix matrix_dft(const ComplexMatrix& X) {
    ComplexMatrix out(X.rows, X.cols);
    const double s = 1.0 / std::sqrt(static_cast<double>(X.cols));
    for (std::size_t i = 0; i < X.rows; ++i) {
        ComplexVector r = dft(X.row(i));
        for (cplx& v : r) v *= s;
        out.set_row(i, r);
    }
    return out;
}

ComplexMatrix matrix_idft(const ComplexMatrix& X) {
    ComplexMatrix out(X.rows, X.cols);
    const double s = std::sqrt(static_cast<double>(X.cols));
    for (std::size_t i = 0; i < X.rows; ++i) {
        ComplexVector r = idft(X.row(i));
        for (cplx& v : r) v *= s;
        out.set_row(i, r);
    }
    return out;
}

std::vector<ComplexVector> gabor_fusion_transform(const ComplexVector& x,
                                                  const ComplexMatrix& Y) {
    const std::size_t n = x.size();
    if (Y.rows != n || Y.cols != n)
        throw DimensionError("gabor_fusion_transform: window stack must be N x N");
    std::vector<ComplexVector> out(n * n, ComplexVector(n, 0.0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t r = 0; r < n; ++r)
                out[k * n + l][r] = inner(x, tf_shift(Y.row(r), k, l));
    return out;
}

}  // namespace gff
