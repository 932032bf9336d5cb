#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ordinary/geometry.hpp"

namespace ordinary {

constexpr int kMaxDegree = 6;

// Number of coefficients of a degree-d form in x, y, z: d(d+3)/2 + 1.
inline int form_dim(int d) { return d * (d + 3) / 2 + 1; }

// Exponent triples (a, b, c), a+b+c = d, in descending graded-lex order.
// This order is a compatibility contract: certificates and files always list
// coefficients against it.
const std::vector<std::array<int, 3>>& monomial_basis(int d);

// Position of x^a y^b z^c within monomial_basis(a+b+c).
int monomial_index(int a, int b, int c);

// A homogeneous form of degree `degree`, coefficients in monomial order.
struct HomPoly {
    int degree = 0;
    std::vector<Int> coeffs;

    bool is_zero() const;
    // Primitive, sign-normalized representative (curves compare as vectors).
    HomPoly normalized() const;
    bool operator==(const HomPoly& o) const { return degree == o.degree && coeffs == o.coeffs; }
    std::string str() const;
};

HomPoly make_poly(int degree, std::vector<Int> coeffs);

// Value of f at the stored integer representative of p; scaling p by t scales
// the value by t^degree, so only zero-ness is projectively meaningful.
Int evaluate(const HomPoly& f, const ProjPoint& p);
bool on_curve(const ProjPoint& p, const HomPoly& f);

// f restricted to L via its canonical parametrization (s, t) -> sP + tQ,
// returned as the d+1 coefficients of s^d, s^(d-1) t, ..., t^d. Identically
// zero exactly when L is a component of f.
std::vector<Int> restrict_to_line(const HomPoly& f, const ProjLine& L);

struct ConicClass {
    enum class Kind { Irreducible, TwoRealLines, DoubleLine, DegeneratePointOrEmpty };
    Kind kind;
    // TwoRealLines with rational factors, or the DoubleLine (in `first`).
    std::optional<std::pair<ProjLine, ProjLine>> lines;
    // Rank-2 data: the singular point and the exact discriminant of the
    // canonical restriction, whose square class decides real factorability.
    std::optional<ProjPoint> singular;
    Int discriminant = 0;
};

// Exact classification over the reals via the rank of the symmetric matrix of
// the quadratic form. Rank-2 conics that split over an irrational quadratic
// extension keep Kind::TwoRealLines but report only the singular point and
// discriminant; the pipeline never needs the irrational lines themselves.
ConicClass classify_conic(const HomPoly& f);

} // namespace ordinary
