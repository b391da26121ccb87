#include "gff/fusion.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eigen_bridge.hpp"

namespace gff {

namespace {

ComplexVector scaled(const ComplexVector& x, cplx s) {
    ComplexVector out = x;
    for (cplx& v : out) v *= s;
    return out;
}

void axpy(ComplexVector& y, cplx a, const ComplexVector& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// ||T - c P||_F for the tightness hypothesis checks.
double tightness_residual(const ComplexMatrix& T, double c, const ComplexMatrix& P) {
    return frobenius_norm(sub(T, scale(P, c)));
}

ComplexMatrix frame_operator_of(const std::vector<ComplexVector>& vecs, std::size_t n) {
    ComplexMatrix T(n, n);
    for (const ComplexVector& v : vecs) T = add(T, outer(v, v));
    return T;
}

}  // namespace

Subspace orthonormalize(const std::vector<ComplexVector>& vectors, double drop_tol) {
    if (vectors.empty()) throw std::invalid_argument("orthonormalize: no input vectors");
    const std::size_t n = vectors.front().size();
    std::vector<ComplexVector> basis;
    for (const ComplexVector& v : vectors) {
        if (v.size() != n) throw DimensionError("orthonormalize: length mismatch");
        ComplexVector w = v;
        // two MGS passes
        for (int pass = 0; pass < 2; ++pass)
            for (const ComplexVector& b : basis) axpy(w, -inner(w, b), b);
        const double r = norm(w);
        if (r > drop_tol) basis.push_back(scaled(w, 1.0 / r));
    }
    if (basis.empty()) throw std::invalid_argument("orthonormalize: all input vectors are zero");
    Subspace out;
    out.ambient_dim = n;
    out.basis = ComplexMatrix(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i) out.basis.set_row(i, basis[i]);
    return out;
}

ComplexMatrix projection(const Subspace& w) {
    ComplexMatrix P(w.ambient_dim, w.ambient_dim);
    for (std::size_t j = 0; j < w.dim(); ++j) P = add(P, outer(w.basis.row(j), w.basis.row(j)));
    return P;
}

std::vector<double> fusion_analysis(const ComplexVector& x, const FusionFrame& f) {
    std::vector<double> out;
    out.reserve(f.subspaces.size());
    for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
        const Subspace& w = f.subspaces[i];
        if (w.ambient_dim != x.size())
            throw DimensionError("fusion_analysis: dimension mismatch");
        // ||P x||^2 = sum_j |<x, b_j>|^2 over the orthonormal basis rows
        double acc = 0.0;
        for (std::size_t j = 0; j < w.dim(); ++j) acc += std::norm(inner(x, w.basis.row(j)));
        const double nu = i < f.weights.size() ? f.weights[i] : 1.0;
        out.push_back(nu * std::sqrt(acc));
    }
    return out;
}

ComplexMatrix fusion_frame_operator_serial(const FusionFrame& f) {
    const std::size_t n = f.ambient_dim();
    ComplexMatrix S(n, n);
    for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
        const double nu = i < f.weights.size() ? f.weights[i] : 1.0;
        S = add(S, scale(projection(f.subspaces[i]), nu * nu));
    }
    return S;
}

ComplexMatrix fusion_frame_operator(const FusionFrame& f) {
    const std::size_t n = f.ambient_dim();
    ComplexMatrix S(n, n);
#ifdef _OPENMP
#pragma omp parallel
    {
        ComplexMatrix local(n, n);
#pragma omp for schedule(static)
        for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
            const double nu = i < f.weights.size() ? f.weights[i] : 1.0;
            local = add(local, scale(projection(f.subspaces[i]), nu * nu));
        }
#pragma omp critical
        for (std::size_t i = 0; i < S.data.size(); ++i) S.data[i] += local.data[i];
    }
#else
    S = fusion_frame_operator_serial(f);
#endif
    return S;
}

std::pair<double, double> frame_bounds(const FusionFrame& f) {
    if (f.subspaces.empty()) throw std::invalid_argument("frame_bounds: empty frame");
    const Eigen::MatrixXcd S = to_eigen(fusion_frame_operator(f));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(S);
    const auto& ev = es.eigenvalues();
    double a = ev(0);
    double b = ev(ev.size() - 1);
    if (a < 1e-12 * std::max(1.0, b)) a = 0.0;  // not spanning
    return {a, b};
}

std::optional<double> is_tight(const FusionFrame& f, double tol) {
    if (f.subspaces.empty()) throw std::invalid_argument("is_tight: empty frame");
    const std::size_t n = f.ambient_dim();
    double trace = 0.0;
    for (std::size_t i = 0; i < f.subspaces.size(); ++i) {
        const double nu = i < f.weights.size() ? f.weights[i] : 1.0;
        trace += nu * nu * static_cast<double>(f.subspaces[i].dim());
    }
    const double a = trace / static_cast<double>(n);
    const ComplexMatrix S = fusion_frame_operator(f);
    const double dev = frobenius_norm(sub(S, scale(ComplexMatrix::identity(n), a)));
    if (dev <= tol * a * std::sqrt(static_cast<double>(n))) return a;
    return std::nullopt;
}

FusionFrame build_from_coisometries(const std::vector<ComplexVector>& seeds,
                                    const std::vector<ComplexMatrix>& coisometries,
                                    double B, double tol) {
    if (seeds.empty() || coisometries.empty())
        throw std::invalid_argument("build_from_coisometries: empty input");
    const std::size_t n = seeds.front().size();
    const double rn = std::sqrt(static_cast<double>(n));

    // seeds must be a B-tight frame for their span
    const Subspace seed_span = orthonormalize(seeds);
    const ComplexMatrix seed_op = frame_operator_of(seeds, n);
    if (tightness_residual(seed_op, B, projection(seed_span)) >
        tol * std::max(1.0, B) * rn)
        throw HypothesisError("seed tightness", 0,
                              "seeds are not a B-tight frame for their span");

    for (std::size_t i = 0; i < coisometries.size(); ++i) {
        const ComplexMatrix& u = coisometries[i];
        if (u.rows != n || u.cols != n)
            throw DimensionError("build_from_coisometries: operator dimension mismatch");
        const ComplexMatrix uu = matmul(u, adjoint(u));
        if (frobenius_norm(sub(uu, ComplexMatrix::identity(n))) > tol * rn)
            throw HypothesisError("coisometry", i, "coisometry violated at index " +
                                                       std::to_string(i));
    }

    // per-seed: the orbit {U_i seed_j}_i must be tight for C^N
    for (std::size_t j = 0; j < seeds.size(); ++j) {
        std::vector<ComplexVector> orbit;
        orbit.reserve(coisometries.size());
        for (const ComplexMatrix& u : coisometries) orbit.push_back(matvec(u, seeds[j]));
        const ComplexMatrix T = frame_operator_of(orbit, n);
        double trace = 0.0;
        for (std::size_t i = 0; i < n; ++i) trace += T(i, i).real();
        const double aj = trace / static_cast<double>(n);
        if (tightness_residual(T, aj, ComplexMatrix::identity(n)) >
            tol * std::max(1.0, aj) * rn)
            throw HypothesisError("orbit tightness", j,
                                  "orbit of seed " + std::to_string(j) +
                                      " is not a tight frame for the ambient space");
    }

    FusionFrame out;
    out.subspaces.reserve(coisometries.size());
    for (std::size_t i = 0; i < coisometries.size(); ++i) {
        std::vector<ComplexVector> images;
        images.reserve(seeds.size());
        for (const ComplexVector& s : seeds) images.push_back(matvec(coisometries[i], s));
        Subspace w = orthonormalize(images);

        // the seed images must be B-tight for the subspace they span
        const ComplexMatrix T = frame_operator_of(images, n);
        if (tightness_residual(T, B, projection(w)) > tol * std::max(1.0, B) * rn)
            throw HypothesisError("image tightness", i,
                                  "seed images at index " + std::to_string(i) +
                                      " are not B-tight for their span");
        out.subspaces.push_back(std::move(w));
    }
    out.weights.assign(out.subspaces.size(), 1.0);
    return out;
}

namespace {

std::vector<ComplexVector> nonzero_rows(const ComplexMatrix& Y) {
    std::vector<ComplexVector> rows;
    for (std::size_t i = 0; i < Y.rows; ++i) {
        ComplexVector r = Y.row(i);
        if (norm(r) > 1e-14) rows.push_back(std::move(r));
    }
    return rows;
}

void check_window_rows(const std::vector<ComplexVector>& rows, std::size_t n, double B,
                       double tol) {
    if (rows.empty())
        throw HypothesisError("window", 0, "window stack has no nonzero rows");
    const Subspace span = orthonormalize(rows);
    const ComplexMatrix T = frame_operator_of(rows, n);
    if (frobenius_norm(sub(T, scale(projection(span), B))) >
        tol * std::max(1.0, B) * std::sqrt(static_cast<double>(n)))
        throw HypothesisError("window tightness", 0,
                              "window rows are not a B-tight frame for their span");
}

}  // namespace

GaborFusionFrame build_gabor_fusion_serial(const ComplexMatrix& Y, double B, double tol) {
    if (Y.rows != Y.cols) throw DimensionError("build_gabor_fusion: Y must be N x N");
    const std::size_t n = Y.rows;
    const std::vector<ComplexVector> rows = nonzero_rows(Y);
    check_window_rows(rows, n, B, tol);

    GaborFusionFrame out;
    out.window_stack = Y;
    out.window_count = rows.size();
    out.declared_B = B;
    out.lattice = full_lattice(n);
    out.tight_constant =
        static_cast<double>(n) * frobenius_norm(Y) * frobenius_norm(Y) / B;
    out.frame.subspaces.resize(n * n);
    for (const auto& [k, l] : out.lattice) {
        std::vector<ComplexVector> shifted;
        shifted.reserve(rows.size());
        for (const ComplexVector& r : rows) shifted.push_back(tf_shift(r, k, l));
        out.frame.subspaces[k * n + l] = orthonormalize(shifted);
    }
    out.frame.weights.assign(n * n, 1.0);
    return out;
}

GaborFusionFrame build_gabor_fusion(const ComplexMatrix& Y, double B, double tol) {
    if (Y.rows != Y.cols) throw DimensionError("build_gabor_fusion: Y must be N x N");
    const std::size_t n = Y.rows;
    const std::vector<ComplexVector> rows = nonzero_rows(Y);
    check_window_rows(rows, n, B, tol);

    GaborFusionFrame out;
    out.window_stack = Y;
    out.window_count = rows.size();
    out.declared_B = B;
    out.lattice = full_lattice(n);
    out.tight_constant =
        static_cast<double>(n) * frobenius_norm(Y) * frobenius_norm(Y) / B;
    out.frame.subspaces.resize(n * n);
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static)
#endif
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            std::vector<ComplexVector> shifted;
            shifted.reserve(rows.size());
            for (const ComplexVector& r : rows) shifted.push_back(tf_shift(r, k, l));
            out.frame.subspaces[k * n + l] = orthonormalize(shifted);
        }
    out.frame.weights.assign(n * n, 1.0);
    return out;
}

}  // namespace gff
