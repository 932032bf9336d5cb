#include "ordinary/curves.hpp"

#include <algorithm>
#include <sstream>

namespace ordinary {

const std::vector<std::array<int, 3>>& monomial_basis(int d) {
    if (d < 1 || d > kMaxDegree) fail(Err::UnsupportedDegree, "degree must be in 1.." + std::to_string(kMaxDegree));
    static std::vector<std::vector<std::array<int, 3>>> cache = [] {
        std::vector<std::vector<std::array<int, 3>>> all(kMaxDegree + 1);
        for (int deg = 1; deg <= kMaxDegree; ++deg) {
            for (int a = deg; a >= 0; --a)
                for (int b = deg - a; b >= 0; --b) all[static_cast<size_t>(deg)].push_back({a, b, deg - a - b});
        }
        return all;
    }();
    return cache[static_cast<size_t>(d)];
}

int monomial_index(int a, int b, int c) {
    const auto& basis = monomial_basis(a + b + c);
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i][0] == a && basis[i][1] == b && basis[i][2] == c) return static_cast<int>(i);
    fail(Err::OutOfRange, "bad exponent triple");
}

bool HomPoly::is_zero() const {
    for (const auto& c : coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

HomPoly HomPoly::normalized() const {
    if (is_zero()) fail(Err::ZeroPolynomial, "cannot normalize the zero form");
    Int g = 0;
    for (const auto& c : coeffs) g = gcd(g, abs(c));
    HomPoly out{degree, coeffs};
    if (g != 1)
        for (auto& c : out.coeffs) c /= g;
    for (const auto& c : out.coeffs) {
        int s = sgn(c);
        if (s > 0) break;
        if (s < 0) {
            for (auto& d : out.coeffs) d = -d;
            break;
        }
    }
    return out;
}

std::string HomPoly::str() const {
    static const char* vars = "xyz";
    const auto& basis = monomial_basis(degree);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (sgn(coeffs[i]) == 0) continue;
        Int a = abs(coeffs[i]);
        os << (first ? (sgn(coeffs[i]) < 0 ? "-" : "") : (sgn(coeffs[i]) < 0 ? " - " : " + "));
        first = false;
        bool printed = false;
        if (a != 1) {
            os << a;
            printed = true;
        }
        for (int v = 0; v < 3; ++v) {
            int e = basis[i][static_cast<size_t>(v)];
            if (e == 0) continue;
            os << vars[v];
            if (e > 1) os << "^" << e;
            printed = true;
        }
        if (!printed) os << a;
    }
    if (first) os << "0";
    return os.str();
}

HomPoly make_poly(int degree, std::vector<Int> coeffs) {
    if (static_cast<int>(coeffs.size()) != form_dim(degree))
        fail(Err::WrongDegree, "coefficient vector has wrong length for degree " + std::to_string(degree));
    return HomPoly{degree, std::move(coeffs)};
}

Int evaluate(const HomPoly& f, const ProjPoint& p) {
    const auto& basis = monomial_basis(f.degree);
    std::array<std::vector<Int>, 3> pow;
    for (int v = 0; v < 3; ++v) {
        pow[static_cast<size_t>(v)].resize(static_cast<size_t>(f.degree) + 1);
        pow[static_cast<size_t>(v)][0] = 1;
        for (int e = 1; e <= f.degree; ++e)
            pow[static_cast<size_t>(v)][static_cast<size_t>(e)] =
                pow[static_cast<size_t>(v)][static_cast<size_t>(e - 1)] * p.v[static_cast<size_t>(v)];
    }
    Int acc = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (sgn(f.coeffs[i]) == 0) continue;
        acc += f.coeffs[i] * pow[0][static_cast<size_t>(basis[i][0])] *
               pow[1][static_cast<size_t>(basis[i][1])] * pow[2][static_cast<size_t>(basis[i][2])];
    }
    return acc;
}

bool on_curve(const ProjPoint& p, const HomPoly& f) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "on_curve against the zero form");
    return sgn(evaluate(f, p)) == 0;
}

namespace {

// (ps + qt)^e as e+1 coefficients of s^e, s^(e-1) t, ..., t^e.
std::vector<Int> binary_pow(const Int& p, const Int& q, int e) {
    std::vector<Int> out(static_cast<size_t>(e) + 1);
    out[0] = 1;
    for (int k = 1; k <= e; ++k) {
        std::vector<Int> next(static_cast<size_t>(k) + 1);
        for (int i = 0; i < k; ++i) {
            next[static_cast<size_t>(i)] += out[static_cast<size_t>(i)] * p;
            next[static_cast<size_t>(i) + 1] += out[static_cast<size_t>(i)] * q;
        }
        out = std::move(next);
    }
    return out;
}

std::vector<Int> binary_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

std::vector<Int> restrict_to_line(const HomPoly& f, const ProjLine& L) {
    if (f.is_zero()) fail(Err::ZeroPolynomial, "restricting the zero form");
    auto [P, Q] = line_basis_points(L);
    const auto& basis = monomial_basis(f.degree);
    std::vector<Int> acc(static_cast<size_t>(f.degree) + 1);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (sgn(f.coeffs[i]) == 0) continue;
        std::vector<Int> term{f.coeffs[i]};
        for (int v = 0; v < 3; ++v) {
            int e = basis[i][static_cast<size_t>(v)];
            if (e > 0)
                term = binary_mul(term, binary_pow(P.v[static_cast<size_t>(v)], Q.v[static_cast<size_t>(v)], e));
        }
        for (size_t k = 0; k < term.size(); ++k) acc[acc.size() - term.size() + k] += term[k];
    }
    return acc;
}

namespace {

// Doubled symmetric matrix of a conic (stays integral).
std::array<std::array<Int, 3>, 3> doubled_matrix(const HomPoly& f) {
    const Int& cxx = f.coeffs[0];
    const Int& cxy = f.coeffs[1];
    const Int& cxz = f.coeffs[2];
    const Int& cyy = f.coeffs[3];
    const Int& cyz = f.coeffs[4];
    const Int& czz = f.coeffs[5];
    return {{{2 * cxx, cxy, cxz}, {cxy, 2 * cyy, cyz}, {cxz, cyz, 2 * czz}}};
}

int matrix_rank3(const std::array<std::array<Int, 3>, 3>& m, Triple* kernel) {
    Int det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
              m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (sgn(det) != 0) return 3;
    // Rank 2: some 2x2 minor is nonzero; the adjugate row spans the kernel.
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            Int minor = m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
            if (sgn(minor) != 0) {
                if (kernel) {
                    // Cross product of two independent rows.
                    const auto& r1 = m[i1];
                    const auto& r2 = m[i2];
                    *kernel = {r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2],
                               r1[0] * r2[1] - r1[1] * r2[0]};
                }
                return 2;
            }
        }
    return 1; // nonzero form, all 2x2 minors vanish
}

} // namespace

ConicClass classify_conic(const HomPoly& f) {
    if (f.degree != 2) fail(Err::WrongDegree, "classify_conic needs a degree-2 form");
    if (f.is_zero()) fail(Err::ZeroPolynomial, "classify_conic on the zero form");
    auto m = doubled_matrix(f);
    Triple kernel;
    int rank = matrix_rank3(m, &kernel);
    if (rank == 3) return ConicClass{ConicClass::Kind::Irreducible, {}, {}, 0};
    if (rank == 1) {
        // f = c * l^2; any nonzero row of the matrix is proportional to l.
        for (int i = 0; i < 3; ++i) {
            if (sgn(m[static_cast<size_t>(i)][0]) != 0 || sgn(m[static_cast<size_t>(i)][1]) != 0 ||
                sgn(m[static_cast<size_t>(i)][2]) != 0) {
                ProjLine l = ProjLine::from_ints(m[static_cast<size_t>(i)][0], m[static_cast<size_t>(i)][1],
                                                 m[static_cast<size_t>(i)][2]);
                return ConicClass{ConicClass::Kind::DoubleLine, std::make_pair(l, l), {}, 0};
            }
        }
        fail(Err::Anomaly, "rank-1 conic with zero matrix");
    }

    // Rank 2: two distinct lines over the complex numbers crossing at the
    // singular point. Restrict to a coordinate line missing that point and
    // read the discriminant of the binary quadratic.
    ProjPoint sing{normalize_triple(kernel)};
    ProjLine cut = ProjLine::from_ints(1, 0, 0);
    for (const auto& cand : {ProjLine::from_ints(1, 0, 0), ProjLine::from_ints(0, 1, 0), ProjLine::from_ints(0, 0, 1)}) {
        if (!incident(sing, cand)) {
            cut = cand;
            break;
        }
    }
    auto g = restrict_to_line(f, cut);         // alpha s^2 + beta s t + gamma t^2
    Int disc = g[1] * g[1] - 4 * g[0] * g[2];
    int ds = sgn(disc);
    if (ds < 0) return ConicClass{ConicClass::Kind::DegeneratePointOrEmpty, {}, sing, disc};
    if (ds == 0) fail(Err::Anomaly, "rank-2 conic with vanishing restricted discriminant");
    if (mpz_perfect_square_p(disc.get_mpz_t())) {
        Int r = sqrt(disc);
        auto [P, Q] = line_basis_points(cut);
        auto at = [&](const Int& s, const Int& t) {
            return ProjPoint{normalize_triple(
                {s * P.v[0] + t * Q.v[0], s * P.v[1] + t * Q.v[1], s * P.v[2] + t * Q.v[2]})};
        };
        ProjPoint r1{ {0,0,0} }, r2{ {0,0,0} };
        if (sgn(g[0]) != 0) {
            r1 = at(-g[1] + r, 2 * g[0]);
            r2 = at(-g[1] - r, 2 * g[0]);
        } else {
            r1 = at(1, 0);
            r2 = at(-g[2], g[1]);
        }
        ProjLine l1 = join(sing, r1), l2 = join(sing, r2);
        if (l2 < l1) std::swap(l1, l2);
        return ConicClass{ConicClass::Kind::TwoRealLines, std::make_pair(l1, l2), sing, disc};
    }
    return ConicClass{ConicClass::Kind::TwoRealLines, {}, sing, disc};
}

} // namespace ordinary
