#include "gff/complex_core.hpp"

#include <cmath>
#include <numbers>

namespace gff {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

ComplexVector dft(const ComplexVector& x) {
    const std::size_t n = x.size();
    ComplexVector out(n);
    for (std::size_t m = 0; m < n; ++m) {
        cplx acc = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = -two_pi * static_cast<double>(m) * static_cast<double>(k) /
                                 static_cast<double>(n);
            acc += x[k] * cplx(std::cos(angle), std::sin(angle));
        }
        out[m] = acc;
    }
    return out;
}

ComplexVector idft(const ComplexVector& xhat) {
    const std::size_t n = xhat.size();
    ComplexVector out(n);
    for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const double angle = two_pi * static_cast<double>(m) * static_cast<double>(k) /
                                 static_cast<double>(n);
            acc += xhat[m] * cplx(std::cos(angle), std::sin(angle));
        }
        out[k] = acc / static_cast<double>(n);
    }
    return out;
}

cplx inner(const ComplexVector& x, const ComplexVector& y) {
    if (x.size() != y.size()) throw DimensionError("inner: length mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * std::conj(y[i]);
    return acc;
}

double norm_sq(const ComplexVector& x) {
    double acc = 0.0;
    for (const cplx& v : x) acc += std::norm(v);
    return acc;
}

double norm(const ComplexVector& x) { return std::sqrt(norm_sq(x)); }

ComplexMatrix matrix_inner(const ComplexMatrix& X, const ComplexMatrix& Y) {
    if (X.rows != Y.rows || X.cols != Y.cols)
        throw DimensionError("matrix_inner: shape mismatch");
    return matmul(X, adjoint(Y));
}

double frobenius_norm(const ComplexMatrix& X) {
    double acc = 0.0;
    for (const cplx& v : X.data) acc += std::norm(v);
    return std::sqrt(acc);
}

ComplexMatrix adjoint(const ComplexMatrix& X) {
    ComplexMatrix out(X.cols, X.rows);
    for (std::size_t i = 0; i < X.rows; ++i)
        for (std::size_t j = 0; j < X.cols; ++j) out(j, i) = std::conj(X(i, j));
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& A, const ComplexMatrix& B) {
    if (A.cols != B.rows) throw DimensionError("matmul: inner dimension mismatch");
    ComplexMatrix out(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const cplx a = A(i, k);
            if (a == cplx(0.0)) continue;
            for (std::size_t j = 0; j < B.cols; ++j) out(i, j) += a * B(k, j);
        }
    return out;
}

ComplexVector matvec(const ComplexMatrix& A, const ComplexVector& x) {
    if (A.cols != x.size()) throw DimensionError("matvec: dimension mismatch");
    ComplexVector out(A.rows, 0.0);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) out[i] += A(i, j) * x[j];
    return out;
}

ComplexMatrix add(const ComplexMatrix& A, const ComplexMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw DimensionError("add: shape mismatch");
    ComplexMatrix out = A;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += B.data[i];
    return out;
}

ComplexMatrix sub(const ComplexMatrix& A, const ComplexMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw DimensionError("sub: shape mismatch");
    ComplexMatrix out = A;
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] -= B.data[i];
    return out;
}

ComplexMatrix scale(const ComplexMatrix& A, cplx s) {
    ComplexMatrix out = A;
    for (cplx& v : out.data) v *= s;
    return out;
}

ComplexMatrix outer(const ComplexVector& x, const ComplexVector& y) {
    ComplexMatrix out(x.size(), y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out(i, j) = x[i] * std::conj(y[j]);
    return out;
}

}  // namespace gff
