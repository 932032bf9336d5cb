#include "ordinary/oracle.hpp"

#include <algorithm>

#include <omp.h>

namespace ordinary {

namespace {

bool next_subset(std::vector<int>& s, int n) {
    int k = static_cast<int>(s.size());
    for (int i = k - 1; i >= 0; --i) {
        if (s[static_cast<size_t>(i)] < n - (k - i)) {
            ++s[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

} // namespace

std::optional<HomPoly> ordinary_on_subset(const PointSet& A, const std::vector<int>& T, int d) {
    const int k = d * (d + 3) / 2;
    if (static_cast<int>(T.size()) != k) fail(Err::BadSubsetSize, "subset size must be d(d+3)/2");
    {
        std::vector<int> s = T;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(Err::BadSubsetSize, "subset indices must be distinct");
    }
    CurveSubspace V = vanishing_subspace(A.subset(T), d);
    if (V.dim() == 0) return std::nullopt;

    auto [rest, back] = A.complement(T);
    for (const auto& p : rest) {
        bool all_zero = true;
        for (const auto& g : V.basis)
            if (sgn(evaluate(g, p)) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return std::nullopt; // every curve through T also hits p
    }
    if (V.dim() == 1) return V.basis[0].normalized();

    // Finitely many proper subspaces cannot cover V, so a member avoiding all
    // remaining points exists; find it by the documented shell enumeration.
    HomPoly found;
    bool ok = enumerate_coefficient_shells(
        V.dim(), V.dim() * (rest.size() + 2), [&](const std::vector<Int>& c) {
            HomPoly f{d, std::vector<Int>(static_cast<size_t>(form_dim(d)))};
            for (size_t g = 0; g < c.size(); ++g)
                for (size_t j = 0; j < f.coeffs.size(); ++j) f.coeffs[j] += c[g] * V.basis[g].coeffs[j];
            if (f.is_zero()) return false;
            for (const auto& p : rest)
                if (sgn(evaluate(f, p)) == 0) return false;
            found = f.normalized();
            return true;
        });
    if (!ok) fail(Err::Anomaly, "avoiding member exists but the shell search missed it");
    return found;
}

std::vector<OracleHit> brute_force_ordinary_serial(const PointSet& A, int d, bool all,
                                                   std::uint64_t budget) {
    const int k = d * (d + 3) / 2;
    const int n = A.size();
    if (n < k) return {};
    if (binomial(n, k) > Int(budget))
        fail(Err::BudgetExceeded, "subset enumeration exceeds the budget of " + std::to_string(budget));

    std::vector<OracleHit> hits;
    std::vector<int> s(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) s[static_cast<size_t>(i)] = i;
    do {
        if (auto f = ordinary_on_subset(A, s, d)) {
            hits.push_back(OracleHit{s, *f});
            if (!all) return hits;
        }
    } while (next_subset(s, n));
    return hits;
}

std::vector<OracleHit> brute_force_ordinary(const PointSet& A, int d, bool all,
                                            std::uint64_t budget, int threads) {
    if (threads == 0) threads = default_threads();
    if (threads <= 1) return brute_force_ordinary_serial(A, d, all, budget);

    const int k = d * (d + 3) / 2;
    const int n = A.size();
    if (n < k) return {};
    if (binomial(n, k) > Int(budget))
        fail(Err::BudgetExceeded, "subset enumeration exceeds the budget of " + std::to_string(budget));

    // Blocks by leading index keep lexicographic order: block i holds every
    // subset starting at i; waves of blocks let `first` mode stop early.
    const int blocks = n - k + 1;
    std::vector<std::vector<OracleHit>> per_block(static_cast<size_t>(blocks));
    for (int wave = 0; wave < blocks; wave += threads) {
        const int end = std::min(blocks, wave + threads);
#pragma omp parallel for schedule(static, 1) num_threads(threads)
        for (int b = wave; b < end; ++b) {
            std::vector<int> s(static_cast<size_t>(k));
            s[0] = b;
            for (int i = 1; i < k; ++i) s[static_cast<size_t>(i)] = b + i;
            auto& mine = per_block[static_cast<size_t>(b)];
            do {
                if (auto f = ordinary_on_subset(A, s, d)) {
                    mine.push_back(OracleHit{s, *f});
                    if (!all) break;
                }
            } while (next_subset(s, n) && s[0] == b);
        }
        if (!all) {
            for (int b = 0; b < end; ++b)
                if (!per_block[static_cast<size_t>(b)].empty())
                    return {per_block[static_cast<size_t>(b)].front()};
        }
    }
    std::vector<OracleHit> hits;
    for (auto& blk : per_block)
        for (auto& h : blk) hits.push_back(std::move(h));
    return hits;
}

TenPointReport tenpoint_pencil_report(const PointSet& B) {
    if (B.size() != 10) fail(Err::WrongSize, "report needs exactly ten points");
    TenPointReport out;
    out.dim = param_dim(B, 3);
    if (out.dim != 1) return out;

    for (const auto& sl : lines_spanned(B)) {
        if (sl.pts.size() >= 6) {
            out.six_line = sl.line;
            return out;
        }
    }
    std::vector<int> s{0, 1, 2, 3, 4, 5, 6, 7, 8};
    do {
        auto sub = vanishing_subspace(B.subset(s), 2);
        if (sub.dim() >= 1) {
            out.nine_conic = sub.basis[0];
            return out;
        }
    } while (next_subset(s, 10));
    fail(Err::Anomaly, "pencil of cubics through ten points without the structural witness");
}

} // namespace ordinary
