#include <doctest.h>

#include <cmath>

#include "gff/gabor.hpp"
#include "test_helpers.hpp"

using namespace gff;
using namespace gfftest;

namespace {

ComplexVector example_window_c7() {
    ComplexVector phi(7, 0.0);
    const double s = 1.0 / std::sqrt(3.0);
    phi[1] = s;
    phi[2] = s;
    phi[4] = s;
    return phi;
}

}  // namespace

TEST_CASE("translate shifts cyclically") {
    const ComplexVector x = {1.0, 2.0, 3.0};
    CHECK(max_abs_diff(translate(x, 1), {3.0, 1.0, 2.0}) == 0.0);
    CHECK(max_abs_diff(translate(x, 0), x) == 0.0);
    CHECK(max_abs_diff(translate(translate(x, 2), 1), x) == 0.0);
}

TEST_CASE("translate group law") {
    std::mt19937_64 rng(21);
    const std::size_t n = 9;
    const ComplexVector x = random_vector(n, rng);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t kp = 0; kp < n; ++kp)
            CHECK(max_abs_diff(translate(translate(x, k), kp),
                               translate(x, (k + kp) % n)) == 0.0);
}

TEST_CASE("modulate uses the negative-exponent convention") {
    std::mt19937_64 rng(22);
    const ComplexVector x = random_vector(5, rng);
    CHECK(max_abs_diff(modulate(x, 0), x) == 0.0);
    CHECK(max_abs_diff(modulate(delta(5, 0), 3), delta(5, 0)) < 1e-15);

    // N=4: M_1 (1,1,1,1) = (1, -i, -1, i)
    const ComplexVector m = modulate(ComplexVector(4, 1.0), 1);
    const ComplexVector expected = {1.0, cplx(0, -1), -1.0, cplx(0, 1)};
    CHECK(max_abs_diff(m, expected) < 1e-14);
}

TEST_CASE("modulate group law") {
    std::mt19937_64 rng(23);
    const std::size_t n = 7;
    const ComplexVector x = random_vector(n, rng);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t lp = 0; lp < n; ++lp)
            CHECK(max_abs_diff(modulate(modulate(x, l), lp),
                               modulate(x, (l + lp) % n)) < 1e-13);
}

TEST_CASE("tf_shift is unitary") {
    std::mt19937_64 rng(24);
    const std::size_t n = 8;
    const ComplexVector x = random_vector(n, rng);
    CHECK(max_abs_diff(tf_shift(x, 0, 0), x) == 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            CHECK(norm(tf_shift(x, k, l)) == doctest::Approx(norm(x)).epsilon(1e-12));
            CHECK(norm(translate(x, k)) == doctest::Approx(norm(x)).epsilon(1e-12));
            CHECK(norm(modulate(x, l)) == doctest::Approx(norm(x)).epsilon(1e-12));
        }
}

TEST_CASE("commutation: T_k M_l = exp(2 pi i k l / N) M_l T_k") {
    std::mt19937_64 rng(25);
    const std::size_t n = 6;
    const ComplexVector x = random_vector(n, rng);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            const ComplexVector lhs = translate(modulate(x, l), k);
            ComplexVector rhs = tf_shift(x, k, l);
            const cplx phase = std::polar(1.0, 2.0 * M_PI * double(k) * double(l) / double(n));
            for (cplx& v : rhs) v *= phase;
            CHECK(max_abs_diff(lhs, rhs) < 1e-13);
        }
}

TEST_CASE("stft of delta window picks out entries") {
    const std::size_t n = 5;
    // x = phi = delta_0: V(k,l) = 1 at k=0 for all l, 0 elsewhere
    const ComplexMatrix v = stft(delta(n, 0), delta(n, 0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            CHECK(std::abs(v(k, l) - (k == 0 ? 1.0 : 0.0)) < 1e-14);

    std::mt19937_64 rng(26);
    const ComplexVector x = random_vector(n, rng);
    const ComplexMatrix vx = stft(x, delta(n, 0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            CHECK(std::abs(std::abs(vx(k, l)) - std::abs(x[k])) < 1e-13);
}

TEST_CASE("stft of the zero signal is zero; zero window throws") {
    const ComplexMatrix v = stft(ComplexVector(4, 0.0), delta(4, 1));
    CHECK(frobenius_norm(v) == 0.0);
    CHECK_THROWS(stft(delta(4, 0), ComplexVector(4, 0.0)));
    CHECK_THROWS_AS(stft(delta(4, 0), delta(5, 0)), DimensionError);
}

TEST_CASE("stft magnitudes are invariant under global phase") {
    std::mt19937_64 rng(27);
    const std::size_t n = 6;
    const ComplexVector x = random_vector(n, rng);
    ComplexVector y = x;
    const cplx c = std::polar(1.0, 1.234);
    for (cplx& v : y) v *= c;
    const ComplexVector phi = random_vector(n, rng);
    const ComplexMatrix a = stft(x, phi);
    const ComplexMatrix b = stft(y, phi);
    for (std::size_t i = 0; i < a.data.size(); ++i)
        CHECK(std::abs(std::abs(a.data[i]) - std::abs(b.data[i])) < 1e-12);
}

TEST_CASE("stft inversion round trip") {
    std::mt19937_64 rng(28);
    const ComplexVector phi = example_window_c7();
    const ComplexVector x = random_vector(7, rng);
    const ComplexVector rec = stft_inverse(stft(x, phi), phi);
    CHECK(max_abs_diff(rec, x) < 1e-10 * norm(x));

    const ComplexVector x4 = random_vector(4, rng);
    CHECK(max_abs_diff(stft_inverse(stft(x4, delta(4, 0)), delta(4, 0)), x4) < 1e-12);

    CHECK(norm(stft_inverse(ComplexMatrix(4, 4), delta(4, 0))) == 0.0);
}

TEST_CASE("gabor frame constant equals N ||phi||^2") {
    CHECK(gabor_frame_constant(delta(4, 0)) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(gabor_frame_constant(example_window_c7()) == doctest::Approx(7.0).epsilon(1e-10));

    std::mt19937_64 rng(29);
    const ComplexVector phi = random_vector(6, rng);
    ComplexVector phi2 = phi;
    for (cplx& v : phi2) v *= 2.5;
    CHECK(gabor_frame_constant(phi2) ==
          doctest::Approx(6.25 * gabor_frame_constant(phi)).epsilon(1e-9));
}

TEST_CASE("full-lattice tightness: sum |<x, pi phi>|^2 = N ||phi||^2 ||x||^2") {
    std::mt19937_64 rng(30);
    for (std::size_t n : {3u, 5u, 8u, 12u}) {
        const ComplexVector phi = random_vector(n, rng);
        const ComplexVector x = random_vector(n, rng);
        const ComplexMatrix v = stft(x, phi);
        double sum = 0.0;
        for (const cplx& c : v.data) sum += std::norm(c);
        const double expected = double(n) * norm_sq(phi) * norm_sq(x);
        CHECK(std::abs(sum - expected) < 1e-9 * expected);
    }
}

TEST_CASE("frame operator oracle: explicit summation matches constant") {
    // assemble S explicitly for the C^7 window and compare against 7 I
    const ComplexVector phi = example_window_c7();
    const ComplexMatrix s = gabor_frame_operator_serial(phi);
    const ComplexMatrix target = scale(ComplexMatrix::identity(7), 7.0);
    CHECK(max_abs_diff(s, target) < 1e-10);
}
