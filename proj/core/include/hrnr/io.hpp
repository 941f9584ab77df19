#pragma once

#include <string>
#include <vector>

#include "hrnr/complex_matrix.hpp"
#include "hrnr/ranges.hpp"
#include "hrnr/structure.hpp"
#include "hrnr/trivariate_poly.hpp"

namespace hrnr {

/// Reads a matrix file {"n": n, "entries": [[[re, im], ...], ...]}.
/// Malformed JSON, non-square shapes and non-finite entries raise InputError
/// with distinct messages.
ComplexMatrix read_matrix(const std::string& path);

ComplexMatrix matrix_from_json_text(const std::string& text);

/// Canonical serialization; write(read(x)) is byte-identical for canonical files.
std::string matrix_to_json_text(const ComplexMatrix& a);

/// {"degree": n, "coeffs": [{"i":..,"j":..,"k":..,"c":..}, ...]},
/// lexicographic in (i, j), coefficients that vanish (relative 1e-12) omitted.
std::string poly_to_json_text(const TrivariatePoly& p);

/// {"classification": ..., "vertices": [[x,y],...], "chebyshev": {...}}.
std::string region_to_json_text(const ConvexRegion& r);

std::string factors_to_json_text(const std::vector<LinearFactor>& fs);

std::string vsets_to_json_text(const VSets& v);

std::string membership_to_json_text(const MembershipResult& m);

/// Equivalence report plus tool version and grid parameters.
std::string report_to_json_text(const EquivalenceReport& rep);

/// Parses "x+yi" complex literals ("2", "-i", "1.5-2e-3i", ...). The real part,
/// when present, must precede the imaginary part; anything ambiguous is
/// rejected with InputError.
cplx parse_complex_point(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hrnr
