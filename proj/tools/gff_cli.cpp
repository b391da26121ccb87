// Command-line front end: build | verify | measure | reconstruct | demo.
//
// Exit codes: 0 success, 1 property false, 2 parse error, 3 failed tightness
// hypothesis, 4 dimension mismatch, 5 uncertified frame, 6 inconsistent
// measurements.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "gff/circulant.hpp"
#include "gff/fusion.hpp"
#include "gff/io.hpp"
#include "gff/phase_retrieval.hpp"

namespace {

constexpr int kExitPropertyFalse = 1;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitDimension = 4;
constexpr int kExitUncertified = 5;
constexpr int kExitInconsistent = 6;

gff::ComplexVector random_signal(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    gff::ComplexVector x(n);
    for (auto& v : x) v = gff::cplx(dist(rng), dist(rng));
    return x;
}

gff::ComplexMatrix stack_windows(const gff::io::BuildConfig& cfg) {
    gff::ComplexMatrix y(cfg.n, cfg.n);
    if (cfg.windows.size() > cfg.n)
        throw gff::io::ParseError("more windows than the dimension allows");
    for (std::size_t i = 0; i < cfg.windows.size(); ++i) y.set_row(i, cfg.windows[i]);
    return y;
}

std::size_t support_size(const gff::ComplexVector& w) {
    std::size_t count = 0;
    for (const auto& v : w)
        if (std::abs(v) > 1e-12) ++count;
    return count;
}

int cmd_build(const std::string& config_path, const std::string& frame_path) {
    gff::io::BuildConfig cfg;
    try {
        cfg = gff::io::read_config_file(config_path);
    } catch (const gff::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        const gff::GaborFusionFrame f = gff::build_gabor_fusion(stack_windows(cfg), cfg.B);
        gff::io::write_frame_file(frame_path, f);
        std::cout << "wrote " << frame_path << ": N=" << cfg.n << ", "
                  << f.frame.subspaces.size() << " subspaces, tight constant "
                  << gff::io::format_double(f.tight_constant) << "\n";
        return 0;
    } catch (const gff::HypothesisError& e) {
        std::cerr << "error: tight fusion frame hypothesis failed (" << e.hypothesis
                  << "): " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    }
}

int cmd_verify(const std::string& frame_path, double tol) {
    gff::GaborFusionFrame f;
    try {
        f = gff::io::read_frame_file(frame_path);
    } catch (const gff::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    const auto [a, b] = gff::frame_bounds(f.frame);
    std::cout << "frame bounds: A = " << gff::io::format_double(a)
              << ", B = " << gff::io::format_double(b) << "\n";
    const auto tight = gff::is_tight(f.frame, tol);
    if (tight)
        std::cout << "tight, A = " << gff::io::format_double(*tight) << "\n";
    else
        std::cout << "not tight\n";
    const gff::CertificateReport cert = gff::injectivity_certificate(f.frame);
    std::cout << "certificate rank " << cert.rank << "/" << cert.full_rank
              << (cert.certified ? " (certified)" : " (inconclusive)") << "\n";
    if (f.window_count > 0) {
        const std::size_t n = f.window_stack.rows;
        const std::size_t n0 = support_size(f.window_stack.row(0));
        if (n0 > 0 && n0 < n)
            std::cout << "condition(" << n << "," << n0 << ") = "
                      << (gff::divisibility_condition(n, n0) ? "true" : "false") << "\n";
    }
    return tight ? 0 : kExitPropertyFalse;
}

int cmd_measure(const std::string& frame_path, const std::string& signal_path,
                const std::string& out_path) {
    try {
        const gff::GaborFusionFrame f = gff::io::read_frame_file(frame_path);
        const gff::ComplexVector x = gff::io::read_signal_file(signal_path);
        const gff::MeasurementSet m = gff::measure(x, f.frame);
        gff::io::write_measurements_file(out_path, m);
        std::cout << "wrote " << out_path << "\n";
        return 0;
    } catch (const gff::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const gff::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    }
}

int cmd_reconstruct(const std::string& frame_path, const std::string& meas_path,
                    const std::string& out_path, const std::string& truth_path,
                    double tol) {
    gff::GaborFusionFrame f;
    gff::MeasurementSet m;
    try {
        f = gff::io::read_frame_file(frame_path);
        m = gff::io::read_measurements_file(meas_path);
    } catch (const gff::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    try {
        const gff::ReconstructionResult r = gff::reconstruct(m, f.frame, tol);
        gff::io::write_signal_file(out_path, r.estimate.representative);
        std::cout << "wrote " << out_path << ", relative residual "
                  << gff::io::format_double(r.residual) << "\n";
        if (r.far_from_rank_one)
            std::cout << "warning: far from rank-one (ratio "
                      << gff::io::format_double(r.rank_one_ratio) << ")\n";
        if (!truth_path.empty()) {
            const gff::ComplexVector x = gff::io::read_signal_file(truth_path);
            std::cout << "mod-phase distance "
                      << gff::io::format_double(
                             gff::mod_phase_distance(x, r.estimate.representative))
                      << "\n";
        }
        return 0;
    } catch (const gff::UncertifiedFrameError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUncertified;
    } catch (const gff::InconsistentMeasurementsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const gff::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const gff::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}

int cmd_demo(std::uint64_t seed, std::size_t n, std::size_t n0) {
    std::cout << "seed " << seed << "\n";
    if (n0 == 0 || n0 >= n) {
        std::cerr << "error: need 0 < support < n\n";
        return kExitParse;
    }
    if (!gff::divisibility_condition(n, n0)) {
        std::cerr << "condition(" << n << "," << n0 << ") fails: the magnitude-recovery "
                  << "circulant is singular; refusing\n";
        return kExitHypothesis;
    }

    // Default geometry mirrors the C^7 example: supports {1,2,4} and {3}.
    gff::ComplexMatrix y(n, n);
    if (n == 7 && n0 == 3) {
        const double s = 1.0 / std::sqrt(3.0);
        y(0, 1) = s;
        y(0, 2) = s;
        y(0, 4) = s;
        y(1, 3) = 1.0;
    } else {
        const double s = 1.0 / std::sqrt(static_cast<double>(n0));
        for (std::size_t i = 0; i < n0; ++i) y(0, i) = s;
        y(1, n0) = 1.0;
    }

    const gff::GaborFusionFrame f = gff::build_gabor_fusion(y, 1.0);
    std::cout << "built N=" << n << " Gabor fusion frame, "
              << f.frame.subspaces.size() << " subspaces\n";
    const auto tight = gff::is_tight(f.frame);
    if (!tight) {
        std::cerr << "error: frame is not tight\n";
        return kExitPropertyFalse;
    }
    std::cout << "tight, A = " << gff::io::format_double(*tight) << "\n";
    const gff::CertificateReport cert = gff::injectivity_certificate(f.frame);
    std::cout << "certificate rank " << cert.rank << "/" << cert.full_rank << "\n";
    if (!cert.certified) {
        std::cerr << "error: frame not certified for phase retrieval\n";
        return kExitUncertified;
    }

    std::mt19937_64 rng(seed);
    bool ok = true;
    for (int trial = 0; trial < 5; ++trial) {
        const gff::ComplexVector x = random_signal(n, rng);
        const gff::MeasurementSet m = gff::measure(x, f.frame);
        const gff::ReconstructionResult r = gff::reconstruct(m, f.frame);
        const double d = gff::mod_phase_distance(x, r.estimate.representative);
        const double rel = d / gff::norm(x);
        std::cout << "trial " << trial << ": mod-phase distance "
                  << gff::io::format_double(rel) << " (relative)\n";
        if (rel > 1e-6) ok = false;
    }
    return ok ? 0 : kExitPropertyFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gabor tight fusion frames: construction, verification, and "
                 "phase retrieval"};
    app.require_subcommand(1);

    std::string config_path, frame_path, signal_path, meas_path, out_path, truth_path;
    double tol = 1e-8;
    double rec_tol = 0.05;
    std::uint64_t seed = 0;
    std::size_t demo_n = 7, demo_support = 3;

    auto* build = app.add_subcommand("build", "Build a Gabor fusion frame from a config");
    build->add_option("--config", config_path, "config file")->required();
    build->add_option("--frame", frame_path, "output frame file")->required();

    auto* verify = app.add_subcommand("verify", "Verify bounds, tightness, certificate");
    verify->add_option("--frame", frame_path, "frame file")->required();
    verify->add_option("--tol", tol, "tightness tolerance");

    auto* measure = app.add_subcommand("measure", "Measure a signal against a frame");
    measure->add_option("--frame", frame_path, "frame file")->required();
    measure->add_option("--signal", signal_path, "signal file")->required();
    measure->add_option("--out", out_path, "output measurement CSV")->required();

    auto* reconstruct =
        app.add_subcommand("reconstruct", "Recover a signal modulo phase");
    reconstruct->add_option("--frame", frame_path, "frame file")->required();
    reconstruct->add_option("--measurements", meas_path, "measurement CSV")->required();
    reconstruct->add_option("--out", out_path, "output signal file")->required();
    reconstruct->add_option("--truth", truth_path, "reference signal for distance report");
    reconstruct->add_option("--tol", rec_tol, "residual tolerance");

    auto* demo = app.add_subcommand("demo", "End-to-end C^7 example");
    demo->add_option("--seed", seed, "RNG seed");
    demo->add_option("--n", demo_n, "ambient dimension");
    demo->add_option("--support", demo_support, "window support size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitParse;
    }

    if (build->parsed()) return cmd_build(config_path, frame_path);
    if (verify->parsed()) return cmd_verify(frame_path, tol);
    if (measure->parsed()) return cmd_measure(frame_path, signal_path, out_path);
    if (reconstruct->parsed())
        return cmd_reconstruct(frame_path, meas_path, out_path, truth_path, rec_tol);
    if (demo->parsed()) return cmd_demo(seed, demo_n, demo_support);
    return kExitParse;
}
