#include "ordinary/finder.hpp"

#include <algorithm>

#include "ordinary/oracle.hpp"
#include "ordinary/sylvester.hpp"

namespace ordinary {

namespace {

HomPoly curve_at(const CurveSubspace& SB, const ProjPoint& param) {
    HomPoly f{SB.degree, std::vector<Int>(static_cast<size_t>(form_dim(SB.degree)))};
    for (size_t g = 0; g < SB.basis.size(); ++g)
        for (size_t j = 0; j < f.coeffs.size(); ++j)
            f.coeffs[j] += param.v[g] * SB.basis[g].coeffs[j];
    return f.normalized();
}

std::vector<int> incident_indices(const PointSet& A, const HomPoly& f) {
    std::vector<int> out;
    for (int i = 0; i < A.size(); ++i)
        if (on_curve(A[i], f)) out.push_back(i);
    return out;
}

void check_containment(const PointSet& A, int d) {
    auto whole = vanishing_subspace(A, d);
    if (whole.dim() >= 1)
        fail(Err::ContainedInCurve,
             "set lies on the degree-" + std::to_string(d) + " curve " + whole.basis[0].str());
}

Certificate seal(const PointSet& A, HomPoly f, std::vector<int> base, std::string tag,
                 std::string method, std::optional<Triple> witness) {
    Certificate cert;
    cert.degree = f.degree;
    cert.coeffs = f.normalized().coeffs;
    cert.incident = incident_indices(A, f);
    cert.base = std::move(base);
    cert.case_tag = std::move(tag);
    cert.method = std::move(method);
    cert.dual_witness = std::move(witness);
    const int want = f.degree * (f.degree + 3) / 2;
    if (static_cast<int>(cert.incident.size()) != want)
        fail(Err::Anomaly, "constructed curve passes through " +
                               std::to_string(cert.incident.size()) + " points instead of " +
                               std::to_string(want));
    return cert;
}

} // namespace

Certificate find_ordinary_line_certificate(const PointSet& A, int threads) {
    auto ord = find_ordinary_line(A, threads);
    HomPoly f{1, {ord.line.v[0], ord.line.v[1], ord.line.v[2]}};
    return seal(A, f, {}, "Line", "pipeline", std::nullopt);
}

Certificate find_ordinary_conic(const PointSet& A, int threads) {
    check_containment(A, 2);
    if (A.size() < 6) fail(Err::TooFewPoints, "ordinary-conic search needs at least six points");

    BSelection sel = select_b_conic(A, threads);
    PointSet B = A.subset(sel.b_indices);
    CurveSubspace SB = vanishing_subspace(B, 2);
    auto [rest, back] = A.complement(sel.b_indices);
    auto image = phi_image(SB, B, rest, threads);

    std::vector<ProjLine> singles;
    std::optional<ProjLine> forbidden;
    for (const auto& pl : image) {
        if (pl.preimages.size() == 1) singles.push_back(pl.dual);
        else forbidden = pl.dual;
    }
    auto z = find_dual_sg_point(singles, forbidden, threads);
    return seal(A, curve_at(SB, z.point), sel.b_indices, case_tag_name(sel.tag), "pipeline",
                z.point.v);
}

Certificate find_ordinary_cubic(const PointSet& A, bool allow_oracle_fallback, int threads) {
    check_containment(A, 3);
    if (A.size() < 10) fail(Err::TooFewPoints, "ordinary-cubic search needs at least ten points");

    BSelection sel;
    try {
        sel = select_b_cubic(A, threads);
    } catch (const Error& e) {
        if (e.code != Err::SelectionFailed || !allow_oracle_fallback) throw;
        auto hits = brute_force_ordinary(A, 3, /*all=*/false, kDefaultSubsetBudget, threads);
        if (hits.empty())
            fail(Err::NotFound,
                 "exhaustive search found no nine-point support: counterexample candidate");
        return seal(A, hits.front().curve, {}, "oracle", "oracle", std::nullopt);
    }

    PointSet B = A.subset(sel.b_indices);
    CurveSubspace SB = vanishing_subspace(B, 3);
    auto [rest, back] = A.complement(sel.b_indices);
    auto image = phi_image(SB, B, rest, threads);

    // A line with exactly two preimages is an immediate win: it is a pencil
    // of cubics through base plus both preimages, and some member avoids the
    // finitely many parameter points tied to the other input points.
    for (const auto& pl : image) {
        if (pl.preimages.size() != 2) continue;
        std::vector<int> nine = sel.b_indices;
        nine.push_back(back[static_cast<size_t>(pl.preimages[0])]);
        nine.push_back(back[static_cast<size_t>(pl.preimages[1])]);
        std::sort(nine.begin(), nine.end());
        CurveSubspace pencil = vanishing_subspace(A.subset(nine), 3);
        if (pencil.dim() != 2) fail(Err::Anomaly, "two-preimage line without a pencil behind it");
        auto [avoid, avoid_back] = A.complement(nine);
        HomPoly f = pencil_member_avoiding(pencil, avoid);
        return seal(A, f, sel.b_indices, case_tag_name(sel.tag), "pipeline", std::nullopt);
    }

    std::vector<ProjLine> singles;
    std::optional<ProjLine> forbidden;
    for (const auto& pl : image) {
        if (pl.preimages.size() == 1) singles.push_back(pl.dual);
        else forbidden = pl.dual; // >= 3 preimages; at most one such line
    }
    auto z = find_dual_sg_point(singles, forbidden, threads);
    return seal(A, curve_at(SB, z.point), sel.b_indices, case_tag_name(sel.tag), "pipeline",
                z.point.v);
}

VerifyResult verify_certificate(const PointSet& A, const Certificate& cert) {
    if (cert.degree < 1 || cert.degree > kMaxDegree) return {false, "unsupported degree"};
    if (static_cast<int>(cert.coeffs.size()) != form_dim(cert.degree))
        return {false, "coefficient vector has the wrong length"};
    HomPoly f{cert.degree, cert.coeffs};
    if (f.is_zero()) return {false, "zero coefficient vector"};
    const int want = cert.degree * (cert.degree + 3) / 2;
    if (static_cast<int>(cert.incident.size()) != want)
        return {false, "incidence list must have exactly " + std::to_string(want) + " entries"};
    for (int i : cert.incident)
        if (i < 0 || i >= A.size()) return {false, "incidence index out of range"};
    auto actual = incident_indices(A, f);
    std::vector<int> claimed = cert.incident;
    std::sort(claimed.begin(), claimed.end());
    if (actual != claimed) return {false, "incidence set mismatch against a full scan"};
    return {true, ""};
}

} // namespace ordinary
