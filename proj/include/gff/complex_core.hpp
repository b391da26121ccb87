#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gff {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

// Dense row-major complex matrix. Small N throughout; no sparsity, no views.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    ComplexVector row(std::size_t i) const {
        return ComplexVector(data.begin() + i * cols, data.begin() + (i + 1) * cols);
    }
    void set_row(std::size_t i, const ComplexVector& v) {
        for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = v[j];
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Unnormalized forward transform: x_hat(m) = sum_n x(n) exp(-2*pi*i*m*n/N).
ComplexVector dft(const ComplexVector& x);

// Inverse of dft: x(n) = (1/N) sum_m x_hat(m) exp(+2*pi*i*m*n/N).
ComplexVector idft(const ComplexVector& xhat);

// <x,y> = sum_n x(n) conj(y(n)).
cplx inner(const ComplexVector& x, const ComplexVector& y);

double norm(const ComplexVector& x);
double norm_sq(const ComplexVector& x);

// Matrix-valued inner product <X,Y> = X Y^*.
ComplexMatrix matrix_inner(const ComplexMatrix& X, const ComplexMatrix& Y);

double frobenius_norm(const ComplexMatrix& X);

ComplexMatrix adjoint(const ComplexMatrix& X);
ComplexMatrix matmul(const ComplexMatrix& A, const ComplexMatrix& B);
ComplexVector matvec(const ComplexMatrix& A, const ComplexVector& x);
ComplexMatrix add(const ComplexMatrix& A, const ComplexMatrix& B);
ComplexMatrix sub(const ComplexMatrix& A, const ComplexMatrix& B);
ComplexMatrix scale(const ComplexMatrix& A, cplx s);

// Outer product x y^* as an N x N matrix.
ComplexMatrix outer(const ComplexVector& x, const ComplexVector& y);

}  // namespace gff
