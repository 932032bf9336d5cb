#include "ordinary/select.hpp"

#include "ordinary/sylvester.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <variant>

namespace ordinary {

const char* case_tag_name(CaseTag t) {
    switch (t) {
        case CaseTag::ConicMain: return "Conic-Main";
        case CaseTag::ConicReIrreducible: return "Conic-ReChoiceIrreducible";
        case CaseTag::ConicReReducible: return "Conic-ReChoiceReducible";
        case CaseTag::Cubic1: return "Cubic-1";
        case CaseTag::Cubic2: return "Cubic-2";
        case CaseTag::Cubic3a: return "Cubic-3a";
        case CaseTag::Cubic3b: return "Cubic-3b";
        case CaseTag::Cubic3c: return "Cubic-3c";
        case CaseTag::Fallback: return "Fallback";
    }
    return "?";
}

bool coconic(const PointSet& S, const std::array<int, 6>& six) {
    std::vector<int> idx(six.begin(), six.end());
    return vanishing_subspace(S.subset(idx), 2).dim() >= 1;
}

HomPoly conic_through(const PointSet& five) {
    auto sub = vanishing_subspace(five, 2);
    if (sub.dim() != 1) fail(Err::BadBase, "five points without a unique conic");
    return sub.basis[0];
}

namespace {

HomPoly curve_at(const CurveSubspace& SB, const ProjPoint& param) {
    HomPoly f{SB.degree, std::vector<Int>(static_cast<size_t>(form_dim(SB.degree)))};
    for (size_t g = 0; g < SB.basis.size(); ++g)
        for (size_t j = 0; j < f.coeffs.size(); ++j)
            f.coeffs[j] += param.v[g] * SB.basis[g].coeffs[j];
    return f.normalized();
}

struct ImageCheck {
    CurveSubspace SB;
    std::vector<PhiLine> image;
    std::vector<int> rest_to_A;
    std::vector<ProjLine> low_lines;         // <= threshold preimages
    std::optional<ProjLine> multi_line;      // the unique heavy line, if any
    int multi_count = 0;
    std::optional<ProjPoint> concurrency;    // common point of the low lines
};

// Shared image verification: at most one line may exceed `multi_threshold`
// preimages; the rest must not share a common point (their common point, if
// any, is reported so callers can run a rechoice).
ImageCheck check_base_image(const PointSet& A, const std::vector<int>& b, int degree,
                            int multi_threshold, int threads) {
    ImageCheck out;
    PointSet B = A.subset(b);
    out.SB = vanishing_subspace(B, degree);
    if (out.SB.dim() != 3) fail(Err::BadBase, "base set does not cut a parameter plane");
    auto [rest, back] = A.complement(b);
    out.rest_to_A = back;
    out.image = phi_image(out.SB, B, rest, threads);
    for (const auto& pl : out.image) {
        if (static_cast<int>(pl.preimages.size()) > multi_threshold) {
            ++out.multi_count;
            out.multi_line = pl.dual;
        } else {
            out.low_lines.push_back(pl.dual);
        }
    }
    if (out.multi_count > 1)
        fail(Err::Anomaly, "more than one multi-preimage line in the parameter image");
    if (out.low_lines.size() >= 2) {
        out.concurrency = common_point(out.low_lines);
    } else if (!out.low_lines.empty()) {
        // A single remaining line is degenerately concurrent; surface a point
        // on it so callers treat this as a failed check.
        auto [P, Q] = line_basis_points(out.low_lines[0]);
        out.concurrency = P;
        (void)Q;
    } else {
        fail(Err::Anomaly, "parameter image has no low-multiplicity lines");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conic base selection

struct ConicCandidates {
    std::vector<int> on_L;       // indices of A on the anchor line L
    std::vector<int> on_C_off_L; // indices on the concurrency conic, off L
};

BSelection conic_rechoice(const PointSet& A, const ProjLine& L, const HomPoly& C,
                          BSelection sel, int threads) {
    auto cls = classify_conic(C);
    std::vector<int> y0_cands, y1_cands, y2_cands;
    for (int i = 0; i < A.size(); ++i) {
        bool onL = incident(A[i], L);
        bool onC = on_curve(A[i], C);
        if (onL && !onC) y0_cands.push_back(i);
    }
    if (cls.kind == ConicClass::Kind::Irreducible) {
        sel.tag = CaseTag::ConicReIrreducible;
        for (int i = 0; i < A.size(); ++i)
            if (on_curve(A[i], C) && !incident(A[i], L)) y1_cands.push_back(i);
        y2_cands = y1_cands;
    } else if (cls.kind == ConicClass::Kind::TwoRealLines && cls.lines) {
        sel.tag = CaseTag::ConicReReducible;
        const auto& [l1, l2] = *cls.lines;
        for (int i = 0; i < A.size(); ++i) {
            if (incident(A[i], L)) continue;
            if (incident(A[i], l1) && !incident(A[i], l2)) y1_cands.push_back(i);
            if (incident(A[i], l2) && !incident(A[i], l1)) y2_cands.push_back(i);
        }
    } else {
        // A rational point set on L plus a line-free conic part would force A
        // onto a conic, which the precondition excludes.
        fail(Err::Anomaly, "concurrency conic of unexpected type: " + C.str());
    }

    for (int y0 : y0_cands)
        for (int y1 : y1_cands)
            for (int y2 : y2_cands) {
                if (y1 == y2 || y1 == y0 || y2 == y0) continue;
                if (collinear(A[y0], A[y1], A[y2])) continue;
                sel.b_indices = {y0, y1, y2};
                std::sort(sel.b_indices.begin(), sel.b_indices.end());
                auto chk = check_base_image(A, sel.b_indices, 2, 1, threads);
                if (chk.multi_count != 0 || chk.concurrency)
                    fail(Err::Anomaly, "conic rechoice produced an invalid base");
                return sel;
            }
    fail(Err::SelectionFailed, "no rechoice base available for the conic pipeline");
}

} // namespace

BSelection select_b_conic(const PointSet& A, int threads) {
    {
        auto whole = vanishing_subspace(A, 2);
        if (whole.dim() >= 1)
            fail(Err::ContainedInCurve, "set lies on the conic " + whole.basis[0].str());
    }
    if (A.size() < 6) fail(Err::TooFewPoints, "conic pipeline needs at least six points");

    auto anchor = find_anchor_point(A, threads);
    int x0 = anchor.index;
    int x1 = -1, x2 = -1;
    for (int i = 0; i < A.size() && (x1 < 0 || x2 < 0); ++i) {
        if (i == x0) continue;
        if (x1 < 0 && incident(A[i], anchor.l1)) x1 = i;
        else if (x2 < 0 && incident(A[i], anchor.l2)) x2 = i;
    }
    if (x1 < 0 || x2 < 0) fail(Err::Anomaly, "anchor lines lost their points");

    BSelection sel;
    sel.tag = CaseTag::ConicMain;
    sel.b_indices = {x0, x1, x2};
    std::sort(sel.b_indices.begin(), sel.b_indices.end());
    ProjLine L = join(A[x1], A[x2]);

    auto chk = check_base_image(A, sel.b_indices, 2, 1, threads);
    if (!chk.concurrency) return sel;
    if (chk.multi_count == 0)
        fail(Err::Anomaly, "image lines concurrent although every preimage is unique");

    // The concurrency point is a conic through the base and everything off L,
    // so the set lies on L together with that conic; rechoose accordingly.
    HomPoly C = curve_at(chk.SB, *chk.concurrency);
    sel.notes.push_back("concurrency conic " + C.str());
    return conic_rechoice(A, L, C, std::move(sel), threads);
}

// ---------------------------------------------------------------------------
// Cubic base selection

namespace {

bool on_any_pair_line(const PointSet& A, const std::vector<int>& chosen, const ProjPoint& p,
                      const std::optional<ProjLine>& skip) {
    for (size_t i = 0; i < chosen.size(); ++i)
        for (size_t j = i + 1; j < chosen.size(); ++j) {
            ProjLine l = join(A[chosen[i]], A[chosen[j]]);
            if (skip && l == *skip) continue;
            if (incident(p, l)) return true;
        }
    return false;
}

std::vector<HomPoly> five_subset_conics(const PointSet& A, const std::vector<int>& chosen) {
    std::vector<HomPoly> out;
    if (chosen.size() < 5) return out;
    std::vector<int> idx(chosen.size());
    for (size_t i = 0; i < chosen.size(); ++i) idx[i] = chosen[i];
    // All 5-subsets; for 5 chosen that is one conic, for 6 chosen six.
    std::vector<int> pick;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (pick.size() == 5) {
            out.push_back(conic_through(A.subset(pick)));
            return;
        }
        for (size_t i = start; i + (5 - pick.size()) <= idx.size(); ++i) {
            pick.push_back(idx[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

bool on_any_conic(const std::vector<HomPoly>& conics, const ProjPoint& p) {
    for (const auto& c : conics)
        if (on_curve(p, c)) return true;
    return false;
}

struct GreedyFailure {
    int step; // which point could not be chosen (1-based position)
    std::vector<ProjLine> blocker_lines;
    std::vector<HomPoly> blocker_conics;
};

// Case-1 greedy: each next point avoids every line spanned by two chosen
// points and every conic spanned by five of them.
std::variant<std::vector<int>, GreedyFailure> greedy_generic_base(const PointSet& A) {
    std::vector<int> chosen;
    std::vector<char> used(static_cast<size_t>(A.size()), 0);
    while (chosen.size() < 7) {
        auto conics = five_subset_conics(A, chosen);
        int pick = -1;
        for (int i = 0; i < A.size(); ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            if (on_any_pair_line(A, chosen, A[i], std::nullopt)) continue;
            if (on_any_conic(conics, A[i])) continue;
            pick = i;
            break;
        }
        if (pick < 0) {
            GreedyFailure fail_info;
            fail_info.step = static_cast<int>(chosen.size()) + 1;
            for (size_t i = 0; i < chosen.size(); ++i)
                for (size_t j = i + 1; j < chosen.size(); ++j)
                    fail_info.blocker_lines.push_back(join(A[chosen[i]], A[chosen[j]]));
            fail_info.blocker_conics = std::move(conics);
            return fail_info;
        }
        chosen.push_back(pick);
        used[static_cast<size_t>(pick)] = 1;
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

int count_on_line(const PointSet& A, const ProjLine& l) {
    int n = 0;
    for (const auto& p : A)
        if (incident(p, l)) ++n;
    return n;
}

int count_on_curve(const PointSet& A, const HomPoly& f) {
    int n = 0;
    for (const auto& p : A)
        if (on_curve(p, f)) ++n;
    return n;
}

// Deterministic probe for a heavy irreducible conic: fit every 5-subset of
// the first ten points and count incidences. Sound by construction (only a
// verified >= 19-point conic dispatches) and cheap; heavy conics that evade
// it are still caught through the greedy blocker analysis.
std::optional<HomPoly> heavy_conic_probe(const PointSet& A) {
    const int k = std::min(A.size(), 10);
    std::optional<HomPoly> best;
    int best_count = 0;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (pick.size() == 5) {
            auto sub = vanishing_subspace(A.subset(pick), 2);
            if (sub.dim() != 1) return;
            const HomPoly& C = sub.basis[0];
            if (classify_conic(C).kind != ConicClass::Kind::Irreducible) return;
            int cnt = count_on_curve(A, C);
            if (cnt >= 19 &&
                (cnt > best_count || (cnt == best_count && best && C.coeffs < best->coeffs)))
                best = C, best_count = cnt;
            return;
        }
        for (int i = start; i + (5 - static_cast<int>(pick.size())) <= k; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return best;
}

std::vector<int> indices_on_line(const PointSet& A, const ProjLine& L, bool on) {
    std::vector<int> out;
    for (int i = 0; i < A.size(); ++i)
        if (incident(A[i], L) == on) out.push_back(i);
    return out;
}

BSelection finish_cubic(const PointSet& A, std::vector<int> b, CaseTag tag,
                        std::vector<std::string> notes, int threads) {
    std::sort(b.begin(), b.end());
    PointSet B = A.subset(b);
    if (max_collinear(B).first > 4) fail(Err::Anomaly, "cubic base has five collinear points");
    for (int drop = 0; drop < 7; ++drop) {
        std::array<int, 6> six{};
        int k = 0;
        for (int i = 0; i < 7; ++i)
            if (i != drop) six[static_cast<size_t>(k++)] = i;
        if (coconic(B, six)) fail(Err::Anomaly, "cubic base has six points on a conic");
    }
    auto chk = check_base_image(A, b, 3, 2, threads);
    if (chk.concurrency) fail(Err::Anomaly, "cubic base image is concurrent after selection");
    BSelection sel;
    sel.b_indices = std::move(b);
    sel.tag = tag;
    sel.notes = std::move(notes);
    return sel;
}

// Case 2: two points off the heavy conic, five on it, all avoiding spanned
// lines and (for the last two) spanned conics.
BSelection cubic_case2(const PointSet& A, const HomPoly& C, std::vector<std::string> notes,
                       int threads) {
    std::vector<int> on, off;
    for (int i = 0; i < A.size(); ++i) (on_curve(A[i], C) ? on : off).push_back(i);
    if (off.size() < 2) fail(Err::Anomaly, "heavy conic leaves fewer than two points off it");
    std::vector<int> chosen{off[0], off[1]};
    for (int step = 3; step <= 7; ++step) {
        auto conics = step >= 6 ? five_subset_conics(A, chosen) : std::vector<HomPoly>{};
        int pick = -1;
        for (int i : on) {
            if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
            if (on_any_pair_line(A, chosen, A[i], std::nullopt)) continue;
            if (on_any_conic(conics, A[i])) continue;
            pick = i;
            break;
        }
        if (pick < 0) {
            if (static_cast<int>(on.size()) >= 19)
                fail(Err::Anomaly, "guaranteed heavy-conic selection ran out of candidates");
            fail(Err::SelectionFailed, "heavy-conic base selection ran out of candidates");
        }
        chosen.push_back(pick);
    }
    notes.push_back("heavy conic " + C.str());
    return finish_cubic(A, std::move(chosen), CaseTag::Cubic2, std::move(notes), threads);
}

// Case 3a: four generic points off the heavy line, three on it, with one
// rechoice round when the image lines come out concurrent.
BSelection cubic_case3a(const PointSet& A, const ProjLine& L, std::vector<std::string> notes,
                        int threads) {
    auto off = indices_on_line(A, L, false);
    auto on = indices_on_line(A, L, true);

    PointSet offset = A.subset(off);
    auto ord = find_ordinary_line(offset, threads);
    int y1 = off[static_cast<size_t>(ord.pts[0])];
    int y2 = off[static_cast<size_t>(ord.pts[1])];
    int y3 = -1, y4 = -1;
    for (int i : off) {
        if (i == y1 || i == y2) continue;
        if (y3 < 0) {
            y3 = i;
            continue;
        }
        if (!collinear(A[y1], A[y2], A[i]) && !collinear(A[y1], A[y3], A[i]) &&
            !collinear(A[y2], A[y3], A[i])) {
            y4 = i;
            break;
        }
    }
    if (y3 < 0 || y4 < 0)
        fail(Err::Anomaly, "points off the heavy line degenerate onto two lines");

    auto choose_on_line = [&](const std::optional<HomPoly>& avoid_cubic) -> std::vector<int> {
        std::vector<int> chosen{y1, y2, y3, y4};
        for (int step = 5; step <= 7; ++step) {
            auto conics = step >= 6 ? five_subset_conics(A, chosen) : std::vector<HomPoly>{};
            int pick = -1;
            for (int i : on) {
                if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
                if (avoid_cubic && on_curve(A[i], *avoid_cubic)) continue;
                if (on_any_pair_line(A, chosen, A[i], L)) continue;
                if (on_any_conic(conics, A[i])) continue;
                pick = i;
                break;
            }
            if (pick < 0) {
                if (static_cast<int>(on.size()) >= 14)
                    fail(Err::Anomaly, "guaranteed heavy-line selection ran out of candidates");
                fail(Err::SelectionFailed, "heavy-line base selection ran out of candidates");
            }
            chosen.push_back(pick);
        }
        return chosen;
    };

    std::vector<int> b = choose_on_line(std::nullopt);
    {
        std::vector<int> sorted_b = b;
        std::sort(sorted_b.begin(), sorted_b.end());
        auto chk = check_base_image(A, sorted_b, 3, 2, threads);
        if (!chk.concurrency)
            return finish_cubic(A, std::move(sorted_b), CaseTag::Cubic3a, std::move(notes), threads);
        // The common point is a cubic through everything off L; redo the
        // on-line picks avoiding its at most three points on L.
        HomPoly D = curve_at(chk.SB, *chk.concurrency);
        notes.push_back("concurrency rechoice avoiding " + D.str());
        b = choose_on_line(D);
    }
    return finish_cubic(A, std::move(b), CaseTag::Cubic3a, std::move(notes), threads);
}

// Case 3b: heavy line, at most nine points off it, three of those collinear
// on a second line.
BSelection cubic_case3b(const PointSet& A, const ProjLine& L, const ProjLine& Lp,
                        std::vector<std::string> notes, int threads) {
    auto on = indices_on_line(A, L, true);
    std::vector<int> off_both, on_Lp;
    for (int i = 0; i < A.size(); ++i) {
        if (incident(A[i], L)) continue;
        if (incident(A[i], Lp)) on_Lp.push_back(i);
        else off_both.push_back(i);
    }
    // First non-collinear triple outside both lines.
    int y1 = -1, y2 = -1, y3 = -1;
    for (size_t a = 0; a < off_both.size() && y1 < 0; ++a)
        for (size_t bb = a + 1; bb < off_both.size() && y1 < 0; ++bb)
            for (size_t c = bb + 1; c < off_both.size(); ++c) {
                if (!collinear(A[off_both[a]], A[off_both[bb]], A[off_both[c]])) {
                    y1 = off_both[a];
                    y2 = off_both[bb];
                    y3 = off_both[c];
                    break;
                }
            }
    if (y1 < 0) fail(Err::Anomaly, "points off both lines are collinear");

    // At most one line carries four or more of the points off both lines.
    std::optional<ProjLine> heavy_off;
    if (off_both.size() >= 4) {
        auto sp = lines_spanned(A.subset(off_both), threads);
        for (const auto& sl : sp)
            if (sl.pts.size() >= 4) heavy_off = sl.line;
    }
    int y4 = -1, y5 = -1;
    for (int i : on_Lp) {
        if (heavy_off && incident(A[i], *heavy_off)) continue;
        if (y4 < 0) y4 = i;
        else if (y5 < 0) {
            y5 = i;
            break;
        }
    }
    if (y5 < 0) fail(Err::SelectionFailed, "not enough usable points on the secondary line");

    std::vector<int> chosen{y1, y2, y3, y4, y5};
    for (int step = 6; step <= 7; ++step) {
        auto conics = five_subset_conics(A, chosen);
        int pick = -1;
        for (int i : on) {
            if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
            if (on_any_pair_line(A, chosen, A[i], std::nullopt)) continue;
            if (on_any_conic(conics, A[i])) continue;
            pick = i;
            break;
        }
        if (pick < 0) fail(Err::SelectionFailed, "heavy-line base selection ran out of candidates");
        chosen.push_back(pick);
    }
    return finish_cubic(A, std::move(chosen), CaseTag::Cubic3b, std::move(notes), threads);
}

// Case 3c: heavy line, at most nine points off it, no three of them collinear.
BSelection cubic_case3c(const PointSet& A, const ProjLine& L, std::vector<std::string> notes,
                        int threads) {
    auto off = indices_on_line(A, L, false);
    auto on = indices_on_line(A, L, true);
    if (off.size() < 5) fail(Err::Anomaly, "too few points off the heavy line");
    std::vector<int> chosen(off.begin(), off.begin() + 5);
    for (int step = 6; step <= 7; ++step) {
        auto conics = five_subset_conics(A, chosen);
        int pick = -1;
        for (int i : on) {
            if (std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
            if (on_any_pair_line(A, chosen, A[i], std::nullopt)) continue;
            if (on_any_conic(conics, A[i])) continue;
            pick = i;
            break;
        }
        if (pick < 0) fail(Err::SelectionFailed, "heavy-line base selection ran out of candidates");
        chosen.push_back(pick);
    }
    return finish_cubic(A, std::move(chosen), CaseTag::Cubic3c, std::move(notes), threads);
}

BSelection dispatch_heavy_line(const PointSet& A, const ProjLine& L, int count, int threads) {
    std::vector<std::string> notes{"heavy line " + L.str() + " with " + std::to_string(count) +
                                   " points"};
    auto off = indices_on_line(A, L, false);
    if (static_cast<int>(off.size()) >= 10) return cubic_case3a(A, L, std::move(notes), threads);
    if (off.size() < 6)
        fail(Err::Anomaly, "at most five points off the heavy line despite the cubic-freeness check");
    if (off.size() >= 3) {
        auto sp = lines_spanned(A.subset(off), threads);
        const SpannedLine* best = nullptr;
        for (const auto& sl : sp)
            if (sl.pts.size() >= 3 && (!best || sl.pts.size() > best->pts.size())) best = &sl;
        if (best) {
            std::vector<int> orig;
            for (int k : best->pts) orig.push_back(off[static_cast<size_t>(k)]);
            ProjLine Lp = best->line;
            notes.push_back("secondary line " + Lp.str());
            return cubic_case3b(A, L, Lp, std::move(notes), threads);
        }
    }
    return cubic_case3c(A, L, std::move(notes), threads);
}

} // namespace

BSelection select_b_cubic(const PointSet& A, int threads) {
    {
        auto whole = vanishing_subspace(A, 3);
        if (whole.dim() >= 1)
            fail(Err::ContainedInCurve, "set lies on the cubic " + whole.basis[0].str());
    }
    if (A.size() < 10) fail(Err::TooFewPoints, "cubic pipeline needs at least ten points");

    auto [mc, L] = max_collinear(A, threads);
    if (mc >= 14) return dispatch_heavy_line(A, L, mc, threads);

    if (auto heavy = heavy_conic_probe(A))
        return cubic_case2(A, *heavy, {"heavy conic via probe"}, threads);

    auto res = greedy_generic_base(A);
    if (std::holds_alternative<std::vector<int>>(res))
        return finish_cubic(A, std::get<std::vector<int>>(res), CaseTag::Cubic1, {}, threads);

    // The greedy exhausted the set: its explicit blockers cover everything,
    // so one of them must be heavy once the set is large enough.
    const auto& fail_info = std::get<GreedyFailure>(res);
    std::vector<std::string> notes{"generic greedy blocked at point " +
                                   std::to_string(fail_info.step)};
    for (const auto& bl : fail_info.blocker_lines) {
        if (count_on_line(A, bl) >= 14) {
            notes.push_back("heavy blocker line");
            return dispatch_heavy_line(A, bl, count_on_line(A, bl), threads);
        }
    }
    std::optional<HomPoly> best;
    int best_count = 0;
    for (const auto& bc : fail_info.blocker_conics) {
        if (classify_conic(bc).kind != ConicClass::Kind::Irreducible)
            fail(Err::Anomaly, "greedy blocker conic is reducible");
        int cnt = count_on_curve(A, bc);
        if (cnt >= 19 && (cnt > best_count || (cnt == best_count && best && bc.coeffs < best->coeffs))) {
            best = bc;
            best_count = cnt;
        }
    }
    if (best) {
        notes.push_back("heavy blocker conic");
        return cubic_case2(A, *best, std::move(notes), threads);
    }
    if (A.size() >= 250)
        fail(Err::Anomaly,
             "greedy failed on a large set but no blocker is heavy; the covering bound is violated");
    fail(Err::SelectionFailed, "generic base selection exhausted a small set");
}

} // namespace ordinary
