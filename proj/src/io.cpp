#include "gff/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gff::io {

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw ParseError("cannot open " + path + " for writing");
    return f;
}

std::string next_line(std::istream& in, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') return line;
    }
    throw ParseError(std::string("unexpected end of input, expected ") + what);
}

std::size_t expect_sized(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string k;
    long long v = -1;
    ss >> k >> v;
    if (!ss || k != key || v < 0)
        throw ParseError("expected '" + key + " <count>', got: " + line);
    return static_cast<std::size_t>(v);
}

double expect_real(const std::string& line, const std::string& key) {
    std::istringstream ss(line);
    std::string k;
    double v = 0.0;
    ss >> k >> v;
    if (k != key || !ss) throw ParseError("expected '" + key + " <value>', got: " + line);
    return v;
}

ComplexVector parse_pairs(const std::string& line, std::size_t n, const char* what) {
    std::istringstream ss(line);
    ComplexVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double re = 0.0, im = 0.0;
        if (!(ss >> re >> im)) throw ParseError(std::string("short ") + what + " line");
        out[i] = cplx(re, im);
    }
    double extra;
    if (ss >> extra) throw ParseError(std::string("trailing data on ") + what + " line");
    return out;
}

std::string format_pairs(const ComplexVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += format_double(v[i].real());
        out += ' ';
        out += format_double(v[i].imag());
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Measurements are magnitudes, not raw signal data: 12 significant digits keeps
// the CSV stable under last-ulp perturbations of the input signal (e.g. a global
// phase rotation applied in double precision).
std::string format_measurement(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

BuildConfig read_config(std::istream& in) {
    BuildConfig cfg;
    cfg.n = expect_sized(next_line(in, "n"), "n");
    if (cfg.n == 0) throw ParseError("dimension must be positive");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string key;
        ss >> key;
        if (key == "B") {
            if (!(ss >> cfg.B)) throw ParseError("bad B line: " + line);
        } else if (key == "window") {
            std::string rest;
            std::getline(ss, rest);
            cfg.windows.push_back(parse_pairs(rest, cfg.n, "window"));
        } else if (key == "support") {
            // indicator of the listed positions, normalized to unit norm
            std::vector<std::size_t> pos;
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                std::istringstream ts(tok);
                long long p = -1;
                ts >> p;
                if (p < 0 || static_cast<std::size_t>(p) >= cfg.n)
                    throw ParseError("support position out of range: " + tok);
                pos.push_back(static_cast<std::size_t>(p));
            }
            if (pos.empty()) throw ParseError("empty support line");
            ComplexVector w(cfg.n, 0.0);
            const double s = 1.0 / std::sqrt(static_cast<double>(pos.size()));
            for (std::size_t p : pos) w[p] = s;
            cfg.windows.push_back(std::move(w));
        } else {
            throw ParseError("unknown config key: " + key);
        }
    }
    if (cfg.windows.empty()) throw ParseError("config declares no windows");
    return cfg;
}

BuildConfig read_config_file(const std::string& path) {
    auto f = open_in(path);
    return read_config(f);
}

void write_signal(std::ostream& out, const ComplexVector& x) {
    out << "N " << x.size() << "\n";
    for (const cplx& v : x)
        out << format_double(v.real()) << " " << format_double(v.imag()) << "\n";
}

ComplexVector read_signal(std::istream& in) {
    const std::size_t n = expect_sized(next_line(in, "N"), "N");
    ComplexVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::istringstream ss(next_line(in, "signal entry"));
        double re = 0.0, im = 0.0;
        if (!(ss >> re >> im)) throw ParseError("bad signal entry");
        x[i] = cplx(re, im);
    }
    return x;
}

void write_signal_file(const std::string& path, const ComplexVector& x) {
    auto f = open_out(path);
    write_signal(f, x);
}

ComplexVector read_signal_file(const std::string& path) {
    auto f = open_in(path);
    return read_signal(f);
}

void write_frame(std::ostream& out, const GaborFusionFrame& f) {
    const std::size_t n = f.window_stack.rows;
    out << "gabor-fusion-frame v1\n";
    out << "n " << n << "\n";
    out << "B " << format_double(f.declared_B) << "\n";
    out << "windows " << f.window_count << "\n";
    for (std::size_t i = 0; i < f.window_count; ++i)
        out << "window " << format_pairs(f.window_stack.row(i)) << "\n";
    out << "subspaces " << f.frame.subspaces.size() << "\n";
    for (std::size_t s = 0; s < f.frame.subspaces.size(); ++s) {
        const auto& [k, l] = f.lattice[s];
        const Subspace& w = f.frame.subspaces[s];
        out << "subspace " << k << " " << l << " dim " << w.dim() << "\n";
        for (std::size_t r = 0; r < w.dim(); ++r)
            out << "basis " << format_pairs(w.basis.row(r)) << "\n";
    }
}

GaborFusionFrame read_frame(std::istream& in) {
    if (next_line(in, "header") != "gabor-fusion-frame v1")
        throw ParseError("bad frame file header");
    GaborFusionFrame f;
    const std::size_t n = expect_sized(next_line(in, "n"), "n");
    if (n == 0) throw ParseError("dimension must be positive");
    f.declared_B = expect_real(next_line(in, "B"), "B");
    f.window_count = expect_sized(next_line(in, "windows"), "windows");
    if (f.window_count > n) throw ParseError("too many windows");
    f.window_stack = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < f.window_count; ++i) {
        std::string line = next_line(in, "window");
        if (line.rfind("window ", 0) != 0) throw ParseError("expected window row");
        f.window_stack.set_row(i, parse_pairs(line.substr(7), n, "window"));
    }
    const std::size_t count = expect_sized(next_line(in, "subspaces"), "subspaces");
    for (std::size_t s = 0; s < count; ++s) {
        std::istringstream ss(next_line(in, "subspace"));
        std::string key, dimkey;
        std::size_t k = 0, l = 0, dim = 0;
        ss >> key >> k >> l >> dimkey >> dim;
        if (key != "subspace" || dimkey != "dim" || !ss)
            throw ParseError("bad subspace header");
        if (k >= n || l >= n || dim == 0 || dim > n)
            throw ParseError("subspace header out of range");
        Subspace w;
        w.ambient_dim = n;
        w.basis = ComplexMatrix(dim, n);
        for (std::size_t r = 0; r < dim; ++r) {
            std::string line = next_line(in, "basis");
            if (line.rfind("basis ", 0) != 0) throw ParseError("expected basis row");
            w.basis.set_row(r, parse_pairs(line.substr(6), n, "basis"));
        }
        f.lattice.emplace_back(k, l);
        f.frame.subspaces.push_back(std::move(w));
    }
    f.frame.weights.assign(count, 1.0);
    double ysq = 0.0;
    for (const cplx& v : f.window_stack.data) ysq += std::norm(v);
    f.tight_constant = f.declared_B > 0.0
                           ? static_cast<double>(n) * ysq / f.declared_B
                           : 0.0;
    return f;
}

void write_frame_file(const std::string& path, const GaborFusionFrame& f) {
    auto fs = open_out(path);
    write_frame(fs, f);
}

GaborFusionFrame read_frame_file(const std::string& path) {
    auto fs = open_in(path);
    return read_frame(fs);
}

void write_measurements(std::ostream& out, const MeasurementSet& m) {
    out << "# squared=0\n";
    const std::size_t n = m.ambient_dim;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            out << k << "," << l << "," << format_measurement(m.values[k * n + l])
                << "\n";
}

MeasurementSet read_measurements(std::istream& in) {
    MeasurementSet m;
    std::vector<double> vals;
    std::string line;
    bool squared = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("squared=1") != std::string::npos) squared = true;
            continue;
        }
        std::istringstream ss(line);
        std::size_t k = 0, l = 0;
        char c1 = 0, c2 = 0;
        double v = 0.0;
        if (!(ss >> k >> c1 >> l >> c2 >> v) || c1 != ',' || c2 != ',')
            throw ParseError("bad measurement row: " + line);
        if (v < 0.0) throw ParseError("negative measurement value: " + line);
        vals.push_back(squared ? std::sqrt(v) : v);
    }
    const auto count = vals.size();
    std::size_t n = 0;
    while (n * n < count) ++n;
    if (n * n != count) throw ParseError("measurement count is not a full lattice");
    m.ambient_dim = n;
    m.values = std::move(vals);
    return m;
}

void write_measurements_file(const std::string& path, const MeasurementSet& m) {
    auto f = open_out(path);
    write_measurements(f, m);
}

MeasurementSet read_measurements_file(const std::string& path) {
    auto f = open_in(path);
    return read_measurements(f);
}

}  // namespace gff::io
