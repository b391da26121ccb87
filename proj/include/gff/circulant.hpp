#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gff/complex_core.hpp"

namespace gff {

// First column (c_0, ..., c_{N-1}) of a circulant matrix; entry (r,c) of the
// realized matrix is c_{(r-c) mod N}.
struct CirculantSpec {
    ComplexVector first_column;

    std::size_t dim() const { return first_column.size(); }
};

struct SingularCirculantError : std::runtime_error {
    std::size_t factor_index;  // j with vanishing eigenvalue factor
    explicit SingularCirculantError(std::size_t j)
        : std::runtime_error("circulant solve: singular matrix, vanishing factor j=" +
                             std::to_string(j)),
          factor_index(j) {}
};

ComplexMatrix realize(const CirculantSpec& spec);

// Product formula: det = prod_j (c_0 + c_1 w_j + ... + c_{N-1} w_j^{N-1}),
// w_j = exp(2*pi*i*j/N).
cplx determinant(const CirculantSpec& spec);

// Binary-support circulant (ones in positions 0..n-1 of the first column) is
// singular iff some j in 1..N-1 has j*n = 0 mod N.
bool is_singular_binary(std::size_t N, std::size_t n);

// Solves realize(spec) * v = b by DFT diagonalization.
ComplexVector solve(const CirculantSpec& spec, const ComplexVector& b);

// First column 1,...,1 (n ones) followed by zeros: the binary support pattern
// whose singularity is governed by gcd(n, N).
CirculantSpec binary_spec(std::size_t N, std::size_t n);

}  // namespace gff
