#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ordinary/errors.hpp"

namespace ordinary {

// Exact arithmetic throughout: arbitrary-precision integers for all stored
// coordinates and coefficients, rationals only at the parsing boundary.
using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline Int abs_int(const Int& a) { return abs(a); }

inline Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) fail(Err::ZeroVector, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

using Triple = std::array<Int, 3>;

// Reduces v to the unique primitive representative with positive leading
// nonzero entry. Throws ZeroVector on the zero triple.
Triple normalize_triple(Triple v);

int compare_triples(const Triple& a, const Triple& b);

// A point of the rational projective plane, stored primitive and
// sign-normalized so equality and ordering are plain coordinate comparisons.
struct ProjPoint {
    Triple v;

    static ProjPoint from_ints(Int x, Int y, Int z) {
        return ProjPoint{normalize_triple({std::move(x), std::move(y), std::move(z)})};
    }
    static ProjPoint from_rationals(const Rat& x, const Rat& y, const Rat& z);
    static ProjPoint affine(long x, long y) { return from_ints(x, y, 1); }

    const Int& x() const { return v[0]; }
    const Int& y() const { return v[1]; }
    const Int& z() const { return v[2]; }

    bool operator==(const ProjPoint& o) const { return v == o.v; }
    bool operator<(const ProjPoint& o) const { return compare_triples(v, o.v) < 0; }
    std::string str() const;
};

// A line in dual coordinates (a, b, c), meaning ax + by + cz = 0.
struct ProjLine {
    Triple v;

    static ProjLine from_ints(Int a, Int b, Int c) {
        return ProjLine{normalize_triple({std::move(a), std::move(b), std::move(c)})};
    }

    bool operator==(const ProjLine& o) const { return v == o.v; }
    bool operator<(const ProjLine& o) const { return compare_triples(v, o.v) < 0; }
    std::string str() const;
};

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l1, const ProjLine& l2);
bool incident(const ProjPoint& p, const ProjLine& l);
bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r);

// Canonical parametrization of a line: two distinct points P < Q spanning it,
// derived from the kernel basis of the dual coordinate row. Deterministic, so
// every restriction of a curve to a line is reproducible.
std::pair<ProjPoint, ProjPoint> line_basis_points(const ProjLine& l);

// An ordered list of distinct projective points; indices are stable and are
// what certificates refer to.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<ProjPoint> pts); // throws DuplicatePoint

    int size() const { return static_cast<int>(pts_.size()); }
    bool empty() const { return pts_.empty(); }
    const ProjPoint& operator[](int i) const { return pts_[static_cast<size_t>(i)]; }
    const std::vector<ProjPoint>& points() const { return pts_; }

    bool contains(const ProjPoint& p) const;
    // Index of p, or -1.
    int index_of(const ProjPoint& p) const;

    PointSet subset(const std::vector<int>& indices) const;
    // Points whose index is not listed, plus the map back to original indices.
    std::pair<PointSet, std::vector<int>> complement(const std::vector<int>& indices) const;

    auto begin() const { return pts_.begin(); }
    auto end() const { return pts_.end(); }

private:
    std::vector<ProjPoint> pts_;
    std::vector<int> order_; // indices sorted by point order, for lookups
};

struct SpannedLine {
    ProjLine line;
    std::vector<int> pts; // ascending indices of incident points, |pts| >= 2
};

// All lines through at least two points of S, each once, sorted by line with
// the full incident index list. threads <= 1 runs the serial reference.
std::vector<SpannedLine> lines_spanned(const PointSet& S, int threads = 0);
std::vector<SpannedLine> lines_spanned_serial(const PointSet& S);

// Point on every line of the family, if one exists. Requires >= 2 lines.
std::optional<ProjPoint> common_point(const std::vector<ProjLine>& lines);

// Largest number of collinear points in S with a witness line (ties broken by
// line order).
std::pair<int, ProjLine> max_collinear(const PointSet& S, int threads = 0);

// Process-wide default used by every kernel that accepts threads = 0.
void set_default_threads(int n);
int default_threads();

} // namespace ordinary
