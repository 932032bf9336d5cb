#include "ordinary/generators.hpp"

#include "ordinary/curves.hpp"

#include <algorithm>
#include <cmath>

namespace ordinary {

GenKind gen_kind_from_name(const std::string& name) {
    if (name == "random") return GenKind::Random;
    if (name == "heavy-line") return GenKind::HeavyLine;
    if (name == "heavy-conic") return GenKind::HeavyConic;
    if (name == "on-cubic") return GenKind::OnCubic;
    if (name == "grid") return GenKind::Grid;
    if (name == "case3b") return GenKind::Case3b;
    if (name == "case3c") return GenKind::Case3c;
    fail(Err::SpecInvalid, "unknown generator kind '" + name + "'");
}

const char* gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::Random: return "random";
        case GenKind::HeavyLine: return "heavy-line";
        case GenKind::HeavyConic: return "heavy-conic";
        case GenKind::OnCubic: return "on-cubic";
        case GenKind::Grid: return "grid";
        case GenKind::Case3b: return "case3b";
        case GenKind::Case3c: return "case3c";
    }
    return "?";
}

namespace {

constexpr int kMaxPointAttempts = 20000;
constexpr int kMaxSalts = 64;

struct Builder {
    std::vector<ProjPoint> pts;

    bool has(const ProjPoint& p) const {
        return std::find(pts.begin(), pts.end(), p) != pts.end();
    }
    bool push(ProjPoint p) {
        if (has(p)) return false;
        pts.push_back(std::move(p));
        return true;
    }
};

// Draws until `make` yields a fresh point passing `admit`.
template <typename Make, typename Admit>
void fill(Builder& b, int count, Make make, Admit admit) {
    for (int k = 0; k < count; ++k) {
        int attempts = 0;
        for (;;) {
            if (++attempts > kMaxPointAttempts)
                fail(Err::SpecInvalid, "generator cannot place a point within its bound");
            ProjPoint p = make();
            if (!admit(p, b)) continue;
            if (b.push(p)) break;
        }
    }
}

bool no_three_collinear_with(const std::vector<ProjPoint>& pts, size_t from, const ProjPoint& p) {
    for (size_t i = from; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (collinear(pts[i], pts[j], p)) return false;
    return true;
}

int second_max_collinear(const PointSet& A, const ProjLine& exclude) {
    int best = 0;
    for (const auto& sl : lines_spanned(A))
        if (!(sl.line == exclude)) best = std::max(best, static_cast<int>(sl.pts.size()));
    return best;
}

const ProjLine kAxis = ProjLine::from_ints(0, 1, 0);   // y = 0
const ProjLine kVert = ProjLine::from_ints(1, 0, 0);   // x = 0
const HomPoly kCircle{2, {Int(1), Int(0), Int(0), Int(1), Int(0), Int(-1)}};      // x^2+y^2-z^2
const HomPoly kNodalCubic{3, {Int(1), Int(0), Int(1), Int(0), Int(0), Int(0),
                              Int(0), Int(-1), Int(0), Int(0)}};                  // x^3+x^2z-y^2z

PointSet attempt(const GeneratorSpec& spec, std::uint64_t salt) {
    Xorshift64Star rng(spec.seed + salt);
    const long B = spec.bound;
    if (spec.n < 1 || B < 1) fail(Err::SpecInvalid, "need n >= 1 and bound >= 1");
    Builder b;

    auto rand_affine = [&] { return ProjPoint::affine(rng.pick(-B, B), rng.pick(-B, B)); };

    switch (spec.kind) {
        case GenKind::Random: {
            fill(b, spec.n, rand_affine, [](const ProjPoint&, const Builder&) { return true; });
            break;
        }
        case GenKind::HeavyLine: {
            int m = spec.on_count ? spec.on_count : std::max(14, spec.n - 20);
            if (m > spec.n) fail(Err::SpecInvalid, "on-line count exceeds n");
            fill(b, m, [&] { return ProjPoint::affine(rng.pick(-B, B), 0); },
                 [](const ProjPoint&, const Builder&) { return true; });
            fill(b, spec.n - m, rand_affine,
                 [](const ProjPoint& p, const Builder&) { return sgn(p.y()) != 0; });
            break;
        }
        case GenKind::HeavyConic: {
            int m = spec.on_count ? spec.on_count : std::max(19, spec.n - 10);
            if (m > spec.n) fail(Err::SpecInvalid, "on-conic count exceeds n");
            fill(b, m,
                 [&] {
                     long t = rng.pick(-B, B);
                     return ProjPoint::from_ints(1 - Int(t) * t, 2 * Int(t), 1 + Int(t) * t);
                 },
                 [](const ProjPoint&, const Builder&) { return true; });
            fill(b, spec.n - m, rand_affine,
                 [](const ProjPoint& p, const Builder&) { return !on_curve(p, kCircle); });
            break;
        }
        case GenKind::OnCubic: {
            fill(b, spec.n,
                 [&] {
                     Int t(rng.pick(-B, B));
                     return ProjPoint::from_ints(t * t - 1, t * (t * t - 1), 1);
                 },
                 [](const ProjPoint&, const Builder&) { return true; });
            break;
        }
        case GenKind::Grid: {
            int s = 1;
            while (s * s < spec.n) ++s;
            for (int k = 0; k < spec.n; ++k) b.push(ProjPoint::affine(k / s, k % s));
            break;
        }
        case GenKind::Case3b: {
            if (spec.n < 21) fail(Err::SpecInvalid, "case3b needs at least 21 points");
            fill(b, spec.n - 7, [&] { return ProjPoint::affine(rng.pick(-B, B), 0); },
                 [](const ProjPoint&, const Builder&) { return true; });
            // Three points on the secondary line x = 0 ...
            fill(b, 3, [&] { return ProjPoint::affine(0, rng.pick(-B, B)); },
                 [](const ProjPoint& p, const Builder&) { return sgn(p.y()) != 0; });
            // ... and four points off both lines, no three of the seven collinear.
            size_t off_start = b.pts.size() - 3;
            fill(b, 4, rand_affine, [&](const ProjPoint& p, const Builder& bb) {
                if (sgn(p.y()) == 0 || sgn(p.x()) == 0) return false;
                return no_three_collinear_with(bb.pts, off_start, p);
            });
            break;
        }
        case GenKind::Case3c: {
            if (spec.n < 21) fail(Err::SpecInvalid, "case3c needs at least 21 points");
            fill(b, spec.n - 7, [&] { return ProjPoint::affine(rng.pick(-B, B), 0); },
                 [](const ProjPoint&, const Builder&) { return true; });
            size_t off_start = b.pts.size();
            fill(b, 7, rand_affine, [&](const ProjPoint& p, const Builder& bb) {
                if (sgn(p.y()) == 0) return false;
                return no_three_collinear_with(bb.pts, off_start, p);
            });
            break;
        }
    }
    return PointSet(std::move(b.pts));
}

bool promise_holds(const GeneratorSpec& spec, const PointSet& A) {
    switch (spec.kind) {
        case GenKind::Random:
            return A.size() < 14 || max_collinear(A).first <= 13;
        case GenKind::HeavyLine: {
            int m = spec.on_count ? spec.on_count : std::max(14, spec.n - 20);
            auto [mc, line] = max_collinear(A);
            return mc == m && line == kAxis && second_max_collinear(A, kAxis) <= 13;
        }
        case GenKind::HeavyConic: {
            int m = spec.on_count ? spec.on_count : std::max(19, spec.n - 10);
            int cnt = 0;
            for (const auto& p : A)
                if (on_curve(p, kCircle)) ++cnt;
            return cnt == m && (A.size() < 14 || max_collinear(A).first <= 13);
        }
        case GenKind::OnCubic: {
            for (const auto& p : A)
                if (!on_curve(p, kNodalCubic)) return false;
            return true;
        }
        case GenKind::Grid:
            return true;
        case GenKind::Case3b: {
            auto [mc, line] = max_collinear(A);
            if (mc != spec.n - 7 || !(line == kAxis)) return false;
            int on_vert = 0;
            for (const auto& p : A)
                if (sgn(p.y()) != 0 && incident(p, kVert)) ++on_vert;
            return on_vert == 3 && second_max_collinear(A, kAxis) <= 13;
        }
        case GenKind::Case3c: {
            auto [mc, line] = max_collinear(A);
            if (mc != spec.n - 7 || !(line == kAxis)) return false;
            std::vector<int> off;
            for (int i = 0; i < A.size(); ++i)
                if (!incident(A[i], kAxis)) off.push_back(i);
            return off.size() == 7 && max_collinear(A.subset(off)).first <= 2;
        }
    }
    return false;
}

} // namespace

PointSet generate(const GeneratorSpec& spec) {
    for (std::uint64_t salt = 0; salt < kMaxSalts; ++salt) {
        PointSet A = attempt(spec, salt);
        if (promise_holds(spec, A)) return A;
    }
    fail(Err::SpecInvalid, "generator could not satisfy its structural promise");
}

} // namespace ordinary
