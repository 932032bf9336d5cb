#include "ordinary/spaces.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include <omp.h>

namespace ordinary {

namespace {

IntMatrix evaluation_matrix(const PointSet& A, int d) {
    const auto& basis = monomial_basis(d);
    IntMatrix m;
    m.reserve(static_cast<size_t>(A.size()));
    for (const auto& p : A) {
        std::array<std::vector<Int>, 3> pow;
        for (int v = 0; v < 3; ++v) {
            pow[static_cast<size_t>(v)].resize(static_cast<size_t>(d) + 1);
            pow[static_cast<size_t>(v)][0] = 1;
            for (int e = 1; e <= d; ++e)
                pow[static_cast<size_t>(v)][static_cast<size_t>(e)] =
                    pow[static_cast<size_t>(v)][static_cast<size_t>(e - 1)] * p.v[static_cast<size_t>(v)];
        }
        std::vector<Int> row;
        row.reserve(basis.size());
        for (const auto& e : basis)
            row.push_back(pow[0][static_cast<size_t>(e[0])] * pow[1][static_cast<size_t>(e[1])] *
                          pow[2][static_cast<size_t>(e[2])]);
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace

CurveSubspace vanishing_subspace(const PointSet& A, int d, bool use_reference) {
    if (d < 1 || d > kMaxDegree) fail(Err::UnsupportedDegree, "degree must be in 1.." + std::to_string(kMaxDegree));
    auto kernel = nullspace(evaluation_matrix(A, d), form_dim(d), use_reference);
    CurveSubspace out{d, {}};
    out.basis.reserve(kernel.size());
    for (auto& v : kernel) out.basis.push_back(HomPoly{d, std::move(v)});
    return out;
}

CurveSubspace subspace_from_forms(const std::vector<HomPoly>& forms) {
    if (forms.empty()) fail(Err::ZeroPolynomial, "subspace needs at least one form");
    int d = forms.front().degree;
    IntMatrix m;
    for (const auto& f : forms) {
        if (f.degree != d) fail(Err::WrongDegree, "mixed degrees in subspace");
        m.push_back(f.coeffs);
    }
    Echelon e = rref_fraction_free(std::move(m));
    CurveSubspace out{d, {}};
    for (auto& row : e.rows) out.basis.push_back(HomPoly{d, std::move(row)});
    return out;
}

int param_dim(const PointSet& A, int d) { return vanishing_subspace(A, d).param_dim(); }

DimDefect expected_dim_defect(const PointSet& A, int d) {
    if (A.size() > 2 * d + 2)
        fail(Err::OutOfRange, "defect characterization only covers up to 2d+2 points");
    int expected = std::max(d * (d + 3) / 2 - A.size(), -1);
    int actual = param_dim(A, d);
    DimDefect out{actual - expected, {}};
    if (out.defect > 0) {
        bool coll = A.size() >= d + 2 && max_collinear(A).first >= d + 2;
        if (coll)
            out.cause = DefectCause::CollinearDPlus2;
        else if (A.size() == 2 * d + 2 && vanishing_subspace(A, 2).dim() >= 1)
            out.cause = DefectCause::ConicFull2dPlus2;
        else
            fail(Err::Anomaly, "dimension defect without a structural cause");
    }
    return out;
}

ProjLine phi_map(const CurveSubspace& SB, const PointSet& B, const ProjPoint& x) {
    if (SB.dim() != 3) fail(Err::BadBase, "base set does not span a parameter plane");
    if (B.contains(x)) fail(Err::PointInBase, "phi_map point lies in the base set " + x.str());
    Int a = evaluate(SB.basis[0], x);
    Int b = evaluate(SB.basis[1], x);
    Int c = evaluate(SB.basis[2], x);
    if (sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0)
        fail(Err::NoCondition, "point imposes no condition on the base pencil: " + x.str());
    return ProjLine::from_ints(std::move(a), std::move(b), std::move(c));
}

std::vector<PhiLine> phi_image_serial(const CurveSubspace& SB, const PointSet& B, const PointSet& rest) {
    std::vector<std::pair<ProjLine, int>> raw;
    raw.reserve(static_cast<size_t>(rest.size()));
    for (int i = 0; i < rest.size(); ++i) raw.emplace_back(phi_map(SB, B, rest[i]), i);
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        int c = compare_triples(a.first.v, b.first.v);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    std::vector<PhiLine> out;
    size_t i = 0;
    while (i < raw.size()) {
        PhiLine pl{raw[i].first, {}};
        size_t j = i;
        while (j < raw.size() && raw[j].first == raw[i].first) pl.preimages.push_back(raw[j++].second);
        out.push_back(std::move(pl));
        i = j;
    }
    return out;
}

std::vector<PhiLine> phi_image(const CurveSubspace& SB, const PointSet& B, const PointSet& rest,
                               int threads) {
    if (threads == 0) threads = default_threads();
    if (threads <= 1) return phi_image_serial(SB, B, rest);

    const int n = rest.size();
    std::vector<std::pair<ProjLine, int>> raw(static_cast<size_t>(n),
                                              std::make_pair(ProjLine{{1, 0, 0}}, 0));
    std::atomic<bool> bad_base{false}, in_base{false}, no_cond{false};
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int i = 0; i < n; ++i) {
        try {
            raw[static_cast<size_t>(i)] = std::make_pair(phi_map(SB, B, rest[i]), i);
        } catch (const Error& e) {
            if (e.code == Err::BadBase) bad_base = true;
            else if (e.code == Err::PointInBase) in_base = true;
            else no_cond = true;
        }
    }
    if (bad_base) fail(Err::BadBase, "base set does not span a parameter plane");
    if (in_base) fail(Err::PointInBase, "phi_map point lies in the base set");
    if (no_cond) fail(Err::NoCondition, "point imposes no condition on the base pencil");

    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        int c = compare_triples(a.first.v, b.first.v);
        if (c != 0) return c < 0;
        return a.second < b.second;
    });
    std::vector<PhiLine> out;
    size_t i = 0;
    while (i < raw.size()) {
        PhiLine pl{raw[i].first, {}};
        size_t j = i;
        while (j < raw.size() && raw[j].first == raw[i].first) pl.preimages.push_back(raw[j++].second);
        out.push_back(std::move(pl));
        i = j;
    }
    return out;
}

bool enumerate_coefficient_shells(int k, int max_shell,
                                  const std::function<bool(const std::vector<Int>&)>& fn) {
    if (k == 1) {
        std::vector<Int> c{Int(1)};
        return fn(c);
    }
    if (k == 2) {
        // Shell s: (s, 0), (0, s), then (s, t), (s, -t), (t, s), (t, -s) for
        // t = 1..s, keeping only primitive vectors (one per ratio).
        for (int s = 1; s <= max_shell; ++s) {
            std::vector<std::pair<long, long>> shell;
            shell.emplace_back(s, 0);
            shell.emplace_back(0, s);
            for (int t = 1; t < s; ++t) {
                shell.emplace_back(s, t);
                shell.emplace_back(s, -t);
                shell.emplace_back(t, s);
                shell.emplace_back(t, -s);
            }
            shell.emplace_back(s, s);
            shell.emplace_back(s, -s);
            for (auto [a, b] : shell) {
                if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
                std::vector<Int> c{Int(a), Int(b)};
                if (fn(c)) return true;
            }
        }
        return false;
    }
    // General case: lexicographic scan of the box [-s, s]^k restricted to the
    // new shell, primitive vectors with positive first nonzero entry.
    std::vector<long> v(static_cast<size_t>(k));
    for (int s = 1; s <= max_shell; ++s) {
        std::function<bool(int, bool)> rec = [&](int pos, bool touched) -> bool {
            if (pos == k) {
                if (!touched) return false;
                long g = 0;
                for (long x : v) g = std::gcd(g, std::abs(x));
                if (g != 1) return false;
                for (long x : v) {
                    if (x > 0) break;
                    if (x < 0) return false;
                }
                std::vector<Int> c;
                c.reserve(static_cast<size_t>(k));
                for (long x : v) c.emplace_back(x);
                return fn(c);
            }
            for (long x = s; x >= -s; --x) {
                v[static_cast<size_t>(pos)] = x;
                if (rec(pos + 1, touched || std::abs(x) == s)) return true;
            }
            return false;
        };
        if (rec(0, false)) return true;
    }
    return false;
}

HomPoly pencil_member_avoiding(const CurveSubspace& pencil, const PointSet& avoid) {
    if (pencil.dim() != 2) fail(Err::BadBase, "pencil_member_avoiding needs a two-dimensional space");
    for (const auto& p : avoid) {
        bool all_zero = true;
        for (const auto& g : pencil.basis)
            if (sgn(evaluate(g, p)) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero)
            fail(Err::ForcedPoint, "every pencil member passes through " + p.str());
    }
    HomPoly found;
    bool ok = enumerate_coefficient_shells(2, avoid.size() + 2, [&](const std::vector<Int>& c) {
        HomPoly f{pencil.degree, std::vector<Int>(static_cast<size_t>(form_dim(pencil.degree)))};
        for (size_t g = 0; g < 2; ++g)
            for (size_t j = 0; j < f.coeffs.size(); ++j) f.coeffs[j] += c[g] * pencil.basis[g].coeffs[j];
        for (const auto& p : avoid)
            if (sgn(evaluate(f, p)) == 0) return false;
        found = f.normalized();
        return true;
    });
    if (!ok) fail(Err::Anomaly, "pencil member search exhausted its shells");
    return found;
}

} // namespace ordinary
