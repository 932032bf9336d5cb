#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ordinary/spaces.hpp"

namespace ordinary {

constexpr std::uint64_t kDefaultSubsetBudget = 10'000'000;

// Decides whether some degree-d curve passes through exactly the points of T
// (a d(d+3)/2-subset of A) and no other point of A, returning one such curve.
// Exact: a curve exists unless the vanishing space of T is trivial or some
// further point is forced onto every member.
std::optional<HomPoly> ordinary_on_subset(const PointSet& A, const std::vector<int>& T, int d);

struct OracleHit {
    std::vector<int> support; // the k-subset, ascending
    HomPoly curve;
};

// Exhaustive scan over all d(d+3)/2-subsets in lexicographic order; `all`
// collects every admissible support, otherwise the first one. An empty result
// with d = 3 is a counterexample candidate for the below-threshold conjecture
// and is always surfaced loudly by callers. Subset count above the budget
// throws BudgetExceeded.
std::vector<OracleHit> brute_force_ordinary(const PointSet& A, int d, bool all,
                                            std::uint64_t budget = kDefaultSubsetBudget,
                                            int threads = 0);
std::vector<OracleHit> brute_force_ordinary_serial(const PointSet& A, int d, bool all,
                                                   std::uint64_t budget = kDefaultSubsetBudget);

struct TenPointReport {
    int dim = -2;                        // projective dimension of the cubic space
    std::optional<ProjLine> six_line;    // witness: line through six of the ten
    std::optional<HomPoly> nine_conic;   // witness: conic through nine of the ten
};

// For ten points whose cubic parameter space is a pencil (dim 1), produces
// the structural witness that must exist: six on a line or nine on a conic.
// Reports the dimension either way; a missing witness at dim 1 is an anomaly.
TenPointReport tenpoint_pencil_report(const PointSet& B);

} // namespace ordinary
