#include "ordinary/sylvester.hpp"

#include <algorithm>

#include <omp.h>

namespace ordinary {

OrdinaryLine find_ordinary_line(const PointSet& A, int threads) {
    if (A.size() < 3) fail(Err::TooFewPoints, "ordinary-line search needs at least three points");
    auto spanned = lines_spanned(A, threads);
    if (spanned.size() == 1) fail(Err::AllCollinear, "all points lie on " + spanned[0].line.str());
    for (const auto& sl : spanned)
        if (sl.pts.size() == 2) return OrdinaryLine{sl.line, {sl.pts[0], sl.pts[1]}};
    fail(Err::NoOrdinaryPoint, "no spanned line with exactly two points; this should be impossible");
}

namespace {

std::vector<ProjPoint> meet_candidates(const std::vector<ProjLine>& lines) {
    std::vector<ProjPoint> cands;
    cands.reserve(lines.size() * (lines.size() - 1) / 2);
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j)
            if (!(lines[i] == lines[j])) cands.push_back(meet(lines[i], lines[j]));
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    return cands;
}

DualSgPoint finish(const std::vector<ProjLine>& lines, const ProjPoint& best) {
    std::array<int, 2> on{-1, -1};
    int cnt = 0;
    for (size_t i = 0; i < lines.size(); ++i)
        if (incident(best, lines[i])) {
            if (cnt < 2) on[static_cast<size_t>(cnt)] = static_cast<int>(i);
            ++cnt;
        }
    if (cnt != 2) fail(Err::Anomaly, "dual search returned a point with wrong incidence count");
    return DualSgPoint{best, on};
}

[[noreturn]] void no_candidate(const std::vector<ProjLine>& lines) {
    if (common_point(lines).has_value())
        fail(Err::AllConcurrent, "all lines of the family share a point");
    fail(Err::NoOrdinaryPoint, "no point on exactly two lines; this should be impossible");
}

void check_preconditions(const std::vector<ProjLine>& lines, const std::optional<ProjLine>& forbidden) {
    if (lines.size() < 2) fail(Err::TooFewLines, "dual search needs at least two lines");
    if (forbidden)
        for (const auto& l : lines)
            if (l == *forbidden) fail(Err::EqualLines, "forbidden line belongs to the family");
}

} // namespace

DualSgPoint find_dual_sg_point_serial(const std::vector<ProjLine>& lines,
                                      const std::optional<ProjLine>& forbidden) {
    check_preconditions(lines, forbidden);
    auto cands = meet_candidates(lines);
    const ProjPoint* best = nullptr;
    for (const auto& c : cands) {
        if (forbidden && incident(c, *forbidden)) continue;
        int cnt = 0;
        for (const auto& l : lines) {
            if (incident(c, l) && ++cnt > 2) break;
        }
        if (cnt == 2 && (!best || c < *best)) best = &c;
    }
    if (!best) no_candidate(lines);
    return finish(lines, *best);
}

DualSgPoint find_dual_sg_point(const std::vector<ProjLine>& lines,
                               const std::optional<ProjLine>& forbidden, int threads) {
    if (threads == 0) threads = default_threads();
    if (threads <= 1) return find_dual_sg_point_serial(lines, forbidden);
    check_preconditions(lines, forbidden);

    auto cands = meet_candidates(lines);
    const int n = static_cast<int>(cands.size());
    std::vector<const ProjPoint*> local(static_cast<size_t>(threads), nullptr);
#pragma omp parallel num_threads(threads)
    {
        const ProjPoint* mine = nullptr;
#pragma omp for schedule(static)
        for (int i = 0; i < n; ++i) {
            const auto& c = cands[static_cast<size_t>(i)];
            if (forbidden && incident(c, *forbidden)) continue;
            int cnt = 0;
            for (const auto& l : lines) {
                if (incident(c, l) && ++cnt > 2) break;
            }
            if (cnt == 2 && (!mine || c < *mine)) mine = &c;
        }
        local[static_cast<size_t>(omp_get_thread_num())] = mine;
    }
    const ProjPoint* best = nullptr;
    for (const ProjPoint* p : local)
        if (p && (!best || *p < *best)) best = p;
    if (!best) no_candidate(lines);
    return finish(lines, *best);
}

AnchorPoint find_anchor_point(const PointSet& A, int threads) {
    if (A.size() < 2) fail(Err::TooFewPoints, "anchor search needs at least two points");
    auto spanned = lines_spanned(A, threads);
    if (spanned.size() == 1) fail(Err::AllCollinear, "all points lie on " + spanned[0].line.str());
    // For every point, the spanned lines through it with 2 or 3 points of A,
    // in line order (spanned is already sorted by line).
    std::vector<std::vector<const SpannedLine*>> small_lines(static_cast<size_t>(A.size()));
    for (const auto& sl : spanned) {
        if (sl.pts.size() < 2 || sl.pts.size() > 3) continue;
        for (int p : sl.pts) small_lines[static_cast<size_t>(p)].push_back(&sl);
    }
    for (int i = 0; i < A.size(); ++i) {
        const auto& mine = small_lines[static_cast<size_t>(i)];
        if (mine.size() >= 2) return AnchorPoint{i, mine[0]->line, mine[1]->line};
    }
    fail(Err::NotFound, "no anchor point; this should be impossible for non-collinear sets");
}

} // namespace ordinary
