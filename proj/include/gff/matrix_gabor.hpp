#pragma once

#include <vector>

#include "gff/complex_core.hpp"

namespace gff {

// Row-wise translation: applies T_l to every row of a square matrix.
ComplexMatrix tilde_translate(const ComplexMatrix& X, std::size_t l);

// Row-wise modulation: applies M_l to every row.
ComplexMatrix tilde_modulate(const ComplexMatrix& X, std::size_t l);

// Circular convolution over Z_N x Z_N: row j of the result is
// sum_i x_i * y_{(j-i) mod N}, with * the cyclic convolution of rows.
ComplexMatrix matrix_convolve(const ComplexMatrix& X, const ComplexMatrix& Y);

// Circular involution: row i becomes x_i^* with x_i^*(l) = conj(x_i(N-l mod N)).
ComplexMatrix matrix_involution(const ComplexMatrix& X);

// Unitary (1/sqrt(N)-normalized) DFT applied to each row.
ComplexMatrix matrix_dft(const ComplexMatrix& X);
ComplexMatrix matrix_idft(const ComplexMatrix& X);

// Gabor fusion transform: entry (k*N + l) is the vector
// (V_{y_0} x(k,l), ..., V_{y_{N-1}} x(k,l)) of row-wise STFT values.
std::vector<ComplexVector> gabor_fusion_transform(const ComplexVector& x,
                                                  const ComplexMatrix& Y);

}  // namespace gff
