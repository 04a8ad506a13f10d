#pragma once

#include <string>

#include "sp2/cavity.hpp"
#include "sp2/decompose.hpp"
#include "sp2/mat2.hpp"
#include "sp2/multilayer.hpp"
#include "sp2/oracle.hpp"

// JSON wire formats.  Parsing accepts any valid JSON number layout;
// emission is hand-formatted at 17 significant digits so outputs are
// byte-reproducible and round-trip to the same doubles.

namespace sp2::io {

// "%.17g" rendering of a double.
std::string format_number(double x);

// {"a": ..., "b": ..., "c": ..., "d": ...}; validated against det_tol.
Mat2 parse_matrix(const std::string& text, const Tolerances& tol = {});
std::string matrix_json(const Mat2& m);

// {"delta": ..., "eta": ..., "class": "...", "param": ..., "negated": ...}
std::string decomposition_json(const Decomposition& d);

// {"R": ..., "s": ..., "d": ...} or normalized {"a": ..., "b": ...}
cavity::NormalizedCavity parse_cavity(const std::string& text);

// {"r": ..., "t": ..., "alpha1": ..., "alpha2": ...}
multilayer::LayerCycle parse_layer_cycle(const std::string& text);

std::string comparison_report_json(const oracle::ComparisonReport& rep);

} // namespace sp2::io
