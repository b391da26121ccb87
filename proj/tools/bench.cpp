// Benchmark: OpenMP kernels vs the serial reference implementations.

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gff/fusion.hpp"
#include "gff/gabor.hpp"

using namespace gff;
using Clock = std::chrono::steady_clock;

namespace {

ComplexVector random_vector(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexVector x(n);
    for (auto& v : x) v = cplx(dist(rng), dist(rng));
    return x;
}

template <typename F>
double time_secs(F&& f) {
    const auto start = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the serial path\n");
#endif
    std::printf("%-28s %6s %12s %12s %8s\n", "kernel", "N", "serial [s]",
                "parallel [s]", "speedup");

    std::mt19937_64 rng(7);
    for (std::size_t n : {16u, 32u, 48u, 64u}) {
        const ComplexVector phi = random_vector(n, rng);
        ComplexMatrix a, b;
        const double ts = time_secs([&] { a = gabor_frame_operator_serial(phi); });
        const double tp = time_secs([&] { b = gabor_frame_operator(phi); });
        const double diff = frobenius_norm(sub(a, b));
        std::printf("%-28s %6zu %12.4f %12.4f %7.2fx  (diff %.2e)\n",
                    "gabor_frame_operator", n, ts, tp, ts / tp, diff);
    }

    for (std::size_t n : {16u, 24u, 32u}) {
        ComplexMatrix y(n, n);
        y.set_row(0, orthonormalize({random_vector(n, rng)}).basis.row(0));
        GaborFusionFrame a, b;
        const double ts = time_secs([&] { a = build_gabor_fusion_serial(y, 1.0); });
        const double tp = time_secs([&] { b = build_gabor_fusion(y, 1.0); });
        std::printf("%-28s %6zu %12.4f %12.4f %7.2fx\n", "build_gabor_fusion", n, ts,
                    tp, ts / tp);

        const double ts2 = time_secs([&] { fusion_frame_operator_serial(a.frame); });
        const double tp2 = time_secs([&] { fusion_frame_operator(a.frame); });
        std::printf("%-28s %6zu %12.4f %12.4f %7.2fx\n", "fusion_frame_operator", n,
                    ts2, tp2, ts2 / tp2);
    }
    return 0;
}
