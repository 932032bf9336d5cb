#include "ordinary/linalg.hpp"

#include <algorithm>

namespace ordinary {

namespace {

void strip_row(std::vector<Int>& row) {
    Int g = 0;
    for (const auto& c : row) {
        g = gcd(g, abs(c));
        if (g == 1) return;
    }
    if (sgn(g) == 0 || g == 1) return;
    for (auto& c : row) c /= g;
}

void sign_fix(std::vector<Int>& row, int pivot_col) {
    if (sgn(row[static_cast<size_t>(pivot_col)]) < 0)
        for (auto& c : row) c = -c;
}

} // namespace

Echelon rref_fraction_free(IntMatrix m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (auto& r : m) strip_row(r);

    std::vector<int> pivot_cols;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        // Smallest nonzero entry as pivot keeps the cross-products small.
        int best = -1;
        for (int i = r; i < rows; ++i) {
            if (sgn(m[static_cast<size_t>(i)][static_cast<size_t>(col)]) == 0) continue;
            if (best < 0 || abs(m[static_cast<size_t>(i)][static_cast<size_t>(col)]) <
                                abs(m[static_cast<size_t>(best)][static_cast<size_t>(col)]))
                best = i;
        }
        if (best < 0) continue;
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(best)]);
        const std::vector<Int> piv_row = m[static_cast<size_t>(r)];
        const Int& piv = piv_row[static_cast<size_t>(col)];
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Int& lead = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (sgn(lead) == 0) continue;
            const Int factor = lead;
            auto& row = m[static_cast<size_t>(i)];
            for (int j = 0; j < cols; ++j)
                row[static_cast<size_t>(j)] =
                    piv * row[static_cast<size_t>(j)] - factor * piv_row[static_cast<size_t>(j)];
            strip_row(row);
        }
        pivot_cols.push_back(col);
        ++r;
    }

    IntMatrix out;
    for (size_t i = 0; i < pivot_cols.size(); ++i) {
        auto row = m[i];
        strip_row(row);
        sign_fix(row, pivot_cols[i]);
        out.push_back(std::move(row));
    }
    return Echelon{std::move(out), std::move(pivot_cols)};
}

Echelon rref_rational(const IntMatrix& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<std::vector<Rat>> q(static_cast<size_t>(rows), std::vector<Rat>(static_cast<size_t>(cols)));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) q[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);

    std::vector<int> pivot_cols;
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(q[static_cast<size_t>(i)][static_cast<size_t>(col)].get_num()) != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(q[static_cast<size_t>(r)], q[static_cast<size_t>(sel)]);
        Rat inv = q[static_cast<size_t>(r)][static_cast<size_t>(col)];
        for (int j = 0; j < cols; ++j) q[static_cast<size_t>(r)][static_cast<size_t>(j)] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rat f = q[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (sgn(f.get_num()) == 0) continue;
            for (int j = 0; j < cols; ++j)
                q[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * q[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_cols.push_back(col);
        ++r;
    }

    IntMatrix out;
    for (size_t i = 0; i < pivot_cols.size(); ++i) {
        Int l = 1;
        for (int j = 0; j < cols; ++j) l = lcm(l, q[i][static_cast<size_t>(j)].get_den());
        std::vector<Int> row(static_cast<size_t>(cols));
        for (int j = 0; j < cols; ++j) {
            Rat v = q[i][static_cast<size_t>(j)] * l;
            row[static_cast<size_t>(j)] = v.get_num();
        }
        strip_row(row);
        sign_fix(row, pivot_cols[i]);
        out.push_back(std::move(row));
    }
    return Echelon{std::move(out), std::move(pivot_cols)};
}

std::vector<std::vector<Int>> nullspace(const IntMatrix& m, int cols, bool use_reference) {
    Echelon e = m.empty() ? Echelon{} : (use_reference ? rref_rational(m) : rref_fraction_free(m));

    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (int pc : e.pivot_cols) is_pivot[static_cast<size_t>(pc)] = 1;

    std::vector<std::vector<Int>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        // Clear pivot denominators with one common multiple.
        Int l = 1;
        for (size_t i = 0; i < e.pivot_cols.size(); ++i)
            l = lcm(l, e.rows[i][static_cast<size_t>(e.pivot_cols[i])]);
        std::vector<Int> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(f)] = l;
        for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
            const Int& piv = e.rows[i][static_cast<size_t>(e.pivot_cols[i])];
            v[static_cast<size_t>(e.pivot_cols[i])] = -e.rows[i][static_cast<size_t>(f)] * (l / piv);
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;

    // Reduce the kernel basis itself so the result is the canonical reduced
    // echelon basis of the nullspace.
    Echelon canon = rref_fraction_free(basis);
    return canon.rows;
}

} // namespace ordinary
