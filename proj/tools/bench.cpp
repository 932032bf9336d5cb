// Benchmarks the parallel kernels against their serial references on
// generated data sets. Wall time only; results are checked for equality so a
// speedup never comes from a divergent code path.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "ordinary/generators.hpp"
#include "ordinary/oracle.hpp"
#include "ordinary/spaces.hpp"
#include "ordinary/sylvester.hpp"

using namespace ordinary;
using Clock = std::chrono::steady_clock;

namespace {

double time_of(const std::function<void()>& body) {
    auto t0 = Clock::now();
    body();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double serial_ms, double par_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", name, serial_ms, par_ms,
                par_ms > 0 ? serial_ms / par_ms : 0.0, equal ? "match" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
    std::printf("threads: %d\n", threads);
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "parallel");

    PointSet A = generate({GenKind::Random, 250, 7, 1000, 0});

    {
        std::vector<SpannedLine> s, p;
        double ts = time_of([&] { s = lines_spanned_serial(A); });
        double tp = time_of([&] { p = lines_spanned(A, threads); });
        bool eq = s.size() == p.size();
        for (size_t i = 0; eq && i < s.size(); ++i)
            eq = s[i].line == p[i].line && s[i].pts == p[i].pts;
        row("lines_spanned n=250", ts, tp, eq);
    }

    {
        std::vector<int> b{0, 1, 2, 3, 4, 5, 6};
        // A generic leading block is fine here: no three of the first seven
        // random points are collinear for this seed.
        PointSet B = A.subset(b);
        CurveSubspace SB = vanishing_subspace(B, 3);
        auto [rest, back] = A.complement(b);
        std::vector<PhiLine> s, p;
        double ts = time_of([&] { s = phi_image_serial(SB, B, rest); });
        double tp = time_of([&] { p = phi_image(SB, B, rest, threads); });
        bool eq = s.size() == p.size();
        for (size_t i = 0; eq && i < s.size(); ++i)
            eq = s[i].dual == p[i].dual && s[i].preimages == p[i].preimages;
        row("phi_image n=250 d=3", ts, tp, eq);

        std::vector<ProjLine> lines;
        for (const auto& pl : s) lines.push_back(pl.dual);
        DualSgPoint ds{}, dp{};
        double us = time_of([&] { ds = find_dual_sg_point_serial(lines, std::nullopt); });
        double up = time_of([&] { dp = find_dual_sg_point(lines, std::nullopt, threads); });
        row("dual_sg m~243", us, up, ds.point == dp.point);
    }

    {
        PointSet S = generate({GenKind::Random, 13, 3, 60, 0});
        std::vector<OracleHit> s, p;
        double ts = time_of([&] { s = brute_force_ordinary_serial(S, 3, true); });
        double tp = time_of([&] { p = brute_force_ordinary(S, 3, true, kDefaultSubsetBudget, threads); });
        bool eq = s.size() == p.size();
        for (size_t i = 0; eq && i < s.size(); ++i)
            eq = s[i].support == p[i].support && s[i].curve == p[i].curve;
        row("oracle scan n=13 d=3", ts, tp, eq);
    }
    return 0;
}
