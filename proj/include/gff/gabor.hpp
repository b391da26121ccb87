#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gff/complex_core.hpp"

namespace gff {

// Time-frequency lattice points (k, l) in Z_N x Z_N.
using LatticePoint = std::pair<std::size_t, std::size_t>;

struct GaborSystem {
    ComplexVector window;                // phi != 0
    std::vector<LatticePoint> lattice;   // unique pairs, components in 0..N-1
};

std::vector<LatticePoint> full_lattice(std::size_t n);

// (T_k x)(n) = x(n - k mod N).
ComplexVector translate(const ComplexVector& x, std::size_t k);

// (M_l x)(n) = exp(-2*pi*i*l*n/N) x(n).  Negative-exponent convention.
ComplexVector modulate(const ComplexVector& x, std::size_t l);

// pi(k,l) = M_l T_k.
ComplexVector tf_shift(const ComplexVector& x, std::size_t k, std::size_t l);

// V_phi x(k,l) = <x, pi(k,l) phi>, returned as an N x N matrix indexed (k,l).
ComplexMatrix stft(const ComplexVector& x, const ComplexVector& phi);

// x(n) = 1/(N ||phi||^2) sum_{k,l} V(k,l) (pi(k,l) phi)(n).
ComplexVector stft_inverse(const ComplexMatrix& V, const ComplexVector& phi);

// Frame operator S = sum_{k,l} (pi(k,l) phi)(pi(k,l) phi)^* over the full lattice.
ComplexMatrix gabor_frame_operator(const ComplexVector& phi);
ComplexMatrix gabor_frame_operator_serial(const ComplexVector& phi);

// Verifies S = A*I and returns A (= N ||phi||^2).  Throws if S is not scalar.
double gabor_frame_constant(const ComplexVector& phi, double tol = 1e-9);

}  // namespace gff
