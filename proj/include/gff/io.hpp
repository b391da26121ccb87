#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gff/fusion.hpp"
#include "gff/phase_retrieval.hpp"

namespace gff::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Build configuration: dimension, declared tight constant B for the window
// rows on their span, and the window rows themselves.
struct BuildConfig {
    std::size_t n = 0;
    double B = 1.0;
    std::vector<ComplexVector> windows;
};

// Text formats; every floating value is written with %.17g so rewriting a
// parsed file is byte-identical.
std::string format_double(double v);

BuildConfig read_config(std::istream& in);
BuildConfig read_config_file(const std::string& path);

void write_signal(std::ostream& out, const ComplexVector& x);
ComplexVector read_signal(std::istream& in);
void write_signal_file(const std::string& path, const ComplexVector& x);
ComplexVector read_signal_file(const std::string& path);

void write_frame(std::ostream& out, const GaborFusionFrame& f);
GaborFusionFrame read_frame(std::istream& in);
void write_frame_file(const std::string& path, const GaborFusionFrame& f);
GaborFusionFrame read_frame_file(const std::string& path);

// CSV rows "k,l,value" (unsquared) in lexicographic (k,l) order, with a
// "# squared=0" header comment.
void write_measurements(std::ostream& out, const MeasurementSet& m);
MeasurementSet read_measurements(std::istream& in);
void write_measurements_file(const std::string& path, const MeasurementSet& m);
MeasurementSet read_measurements_file(const std::string& path);

}  // namespace gff::io
