#pragma once

#include <string>

#include "ordinary/finder.hpp"

namespace ordinary {

// One point per non-comment line: two fields are affine (x, y, 1), three are
// homogeneous; fields are integers or fractions "p/q"; '#' starts a comment.
// Duplicate points are rejected with their line number.
PointSet parse_points(const std::string& text);
std::string write_points(const PointSet& A);

// Line-oriented key-value certificate format with a fixed key order:
// degree, monomial-order, coeffs, incident, base, case, method, dual-witness.
// Round trips are bit-exact; unknown keys and malformed counts are rejected.
std::string write_certificate(const Certificate& cert);
Certificate read_certificate(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace ordinary
