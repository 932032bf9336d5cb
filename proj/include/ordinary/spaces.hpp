#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ordinary/curves.hpp"
#include "ordinary/linalg.hpp"

namespace ordinary {

// Basis of the vector space of degree-d forms vanishing on a point set, in
// canonical reduced echelon form; equal subspaces always carry identical
// bases, which fixes the coordinate system of the projectivized space.
struct CurveSubspace {
    int degree = 0;
    std::vector<HomPoly> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    // Projective dimension; -1 means no curve of this degree contains the set.
    int param_dim() const { return dim() - 1; }
};

// Exact nullspace of the |A| x form_dim(d) evaluation matrix.
CurveSubspace vanishing_subspace(const PointSet& A, int d, bool use_reference = false);

// Subspace spanned by explicit forms (canonicalized; they need not be
// independent). Degree taken from the first form.
CurveSubspace subspace_from_forms(const std::vector<HomPoly>& forms);

int param_dim(const PointSet& A, int d);

enum class DefectCause { CollinearDPlus2, ConicFull2dPlus2 };

struct DimDefect {
    int defect = 0;
    std::optional<DefectCause> cause;
};

// How far the parameter dimension exceeds the generic count for small sets
// (|A| <= 2d+2), with the structural reason when it does: d+2 collinear
// points, or a full set of 2d+2 points on a conic. Collinearity is reported
// first when both hold.
DimDefect expected_dim_defect(const PointSet& A, int d);

// A line in the parameter plane of a base set B, in dual coordinates with
// respect to the canonical basis (f1, f2, f3) of B's vanishing space,
// together with the points mapping to it.
struct PhiLine {
    ProjLine dual;
    std::vector<int> preimages; // ascending indices into the `rest` set
};

// The parameter-plane line of curves through B and x: dual coordinates
// (f1(x), f2(x), f3(x)). Requires B's parameter plane to be 2-dimensional and
// x outside B; throws NoCondition if x imposes no condition on the basis.
ProjLine phi_map(const CurveSubspace& SB, const PointSet& B, const ProjPoint& x);

// Image of every point of `rest` under phi_map, deduplicated by dual
// coordinates, preimage lists and output both sorted. Thread-count never
// changes the result.
std::vector<PhiLine> phi_image(const CurveSubspace& SB, const PointSet& B, const PointSet& rest,
                               int threads = 0);
std::vector<PhiLine> phi_image_serial(const CurveSubspace& SB, const PointSet& B, const PointSet& rest);

// Enumerates primitive integer coefficient vectors over increasing max-norm
// shells -- for two generators: (1,0), (0,1), (1,1), (1,-1), (2,1), ... --
// calling fn until it returns true. Returns false if max_shell is exhausted.
bool enumerate_coefficient_shells(int k, int max_shell, const std::function<bool(const std::vector<Int>&)>& fn);

// Member of a pencil (dim-2 subspace) not vanishing at any avoid point,
// chosen by the documented shell enumeration so results are reproducible.
// Throws ForcedPoint if some avoid point vanishes on the whole pencil.
HomPoly pencil_member_avoiding(const CurveSubspace& pencil, const PointSet& avoid);

} // namespace ordinary
