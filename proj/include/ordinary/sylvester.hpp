#pragma once

#include <optional>
#include <vector>

#include "ordinary/geometry.hpp"

namespace ordinary {

struct OrdinaryLine {
    ProjLine line;
    std::array<int, 2> pts; // the exactly-two incident indices, ascending
};

// First spanned line (in line order) carrying exactly two points of A.
// Requires |A| >= 3 and A not all collinear; existence is then guaranteed.
OrdinaryLine find_ordinary_line(const PointSet& A, int threads = 0);

struct DualSgPoint {
    ProjPoint point;
    std::array<int, 2> lines; // indices of the two incident lines, ascending
};

// Smallest point (in point order) lying on exactly two of the given lines and
// off the forbidden line when one is supplied. Candidates are the pairwise
// meets. Throws AllConcurrent when no candidate qualifies because the family
// shares a point, NoOrdinaryPoint when the guaranteed search fails anyway.
DualSgPoint find_dual_sg_point(const std::vector<ProjLine>& lines,
                               const std::optional<ProjLine>& forbidden, int threads = 0);
DualSgPoint find_dual_sg_point_serial(const std::vector<ProjLine>& lines,
                                      const std::optional<ProjLine>& forbidden);

struct AnchorPoint {
    int index;
    ProjLine l1;
    ProjLine l2;
};

// First point of A (by index) lying on two spanned lines that each carry two
// or three points of A, with the first two such lines in line order.
// Guaranteed to exist when A is not all collinear.
AnchorPoint find_anchor_point(const PointSet& A, int threads = 0);

} // namespace ordinary
