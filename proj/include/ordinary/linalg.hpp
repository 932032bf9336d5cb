#pragma once

#include <vector>

#include "ordinary/geometry.hpp"

namespace ordinary {

using IntMatrix = std::vector<std::vector<Int>>;

struct Echelon {
    IntMatrix rows;             // canonical reduced echelon rows, primitive, pivot > 0
    std::vector<int> pivot_cols; // ascending
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

// Fraction-free Gauss-Jordan over the integers: rows are combined by
// cross-multiplication and stripped to primitive after every update, which
// keeps entry growth at the size of matrix minors. The reduced rows are the
// unique rational RREF scaled to primitive integer vectors with positive
// pivots, so equal row spaces yield identical output.
Echelon rref_fraction_free(IntMatrix m);

// Reference implementation over mpq, normalized the same way. Kept as the
// independent route for testing the fraction-free one.
Echelon rref_rational(const IntMatrix& m);

// Canonical basis of the right nullspace (each vector primitive, reduced
// echelon, positive pivot). `use_reference` routes through rref_rational.
std::vector<std::vector<Int>> nullspace(const IntMatrix& m, int cols, bool use_reference = false);

} // namespace ordinary
