#pragma once

#include <Eigen/Dense>

#include "gff/complex_core.hpp"

namespace gff {

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    Eigen::MatrixXcd out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
    return out;
}

inline ComplexMatrix from_eigen(const Eigen::MatrixXcd& m) {
    ComplexMatrix out(static_cast<std::size_t>(m.rows()),
                      static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return out;
}

}  // namespace gff
