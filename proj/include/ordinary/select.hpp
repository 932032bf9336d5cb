#pragma once

#include <string>
#include <vector>

#include "ordinary/spaces.hpp"

namespace ordinary {

enum class CaseTag {
    ConicMain,
    ConicReIrreducible,
    ConicReReducible,
    Cubic1,
    Cubic2,
    Cubic3a,
    Cubic3b,
    Cubic3c,
    Fallback,
};

const char* case_tag_name(CaseTag t);

struct BSelection {
    std::vector<int> b_indices; // ascending indices into A
    CaseTag tag = CaseTag::Fallback;
    std::vector<std::string> notes; // audit trail: curves avoided, heavy structures, rechoices
};

// True when the six indexed points lie on a common conic.
bool coconic(const PointSet& S, const std::array<int, 6>& six);

// Unique conic through five points, no four collinear. Throws BadBase if the
// conic space is not one-dimensional.
HomPoly conic_through(const PointSet& five);

// Three-point base for the conic pipeline: anchored choice, with the two
// rechoice branches when the single-preimage image lines come out concurrent.
// Requires A not contained in a conic; the returned base always passes the
// image checks (at most one multi-preimage line, rest not concurrent).
BSelection select_b_conic(const PointSet& A, int threads = 0);

// Seven-point base for the cubic pipeline, dispatching on heavy lines
// (>= 14 points) and heavy irreducible conics (>= 19 points). Success is
// guaranteed for |A| >= 250; below that SelectionFailed is a normal outcome.
BSelection select_b_cubic(const PointSet& A, int threads = 0);

} // namespace ordinary
