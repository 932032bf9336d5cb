#include <doctest.h>

#include "ordinary/finder.hpp"
#include "ordinary/generators.hpp"
#include "ordinary/oracle.hpp"
#include "ordinary/sylvester.hpp"

using namespace ordinary;

TEST_SUITE("parallel") {

TEST_CASE("lines_spanned parallel equals serial") {
    PointSet A = generate({GenKind::Random, 60, 3, 200, 0});
    auto s = lines_spanned_serial(A);
    for (int t : {2, 4, 7}) {
        auto p = lines_spanned(A, t);
        REQUIRE(p.size() == s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            CHECK(p[i].line == s[i].line);
            CHECK(p[i].pts == s[i].pts);
        }
    }
}

TEST_CASE("phi_image parallel equals serial") {
    PointSet A = generate({GenKind::Random, 60, 9, 300, 0});
    std::vector<int> b{0, 1, 2, 3, 4, 5, 6};
    PointSet B = A.subset(b);
    auto SB = vanishing_subspace(B, 3);
    REQUIRE(SB.dim() == 3);
    auto [rest, back] = A.complement(b);
    auto s = phi_image_serial(SB, B, rest);
    for (int t : {2, 5}) {
        auto p = phi_image(SB, B, rest, t);
        REQUIRE(p.size() == s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            CHECK(p[i].dual == s[i].dual);
            CHECK(p[i].preimages == s[i].preimages);
        }
    }
}

TEST_CASE("dual point search parallel equals serial") {
    PointSet A = generate({GenKind::Random, 40, 11, 150, 0});
    std::vector<int> b{0, 1, 2, 3, 4, 5, 6};
    auto SB = vanishing_subspace(A.subset(b), 3);
    REQUIRE(SB.dim() == 3);
    auto [rest, back] = A.complement(b);
    auto img = phi_image(SB, A.subset(b), rest);
    std::vector<ProjLine> lines;
    for (const auto& pl : img)
        if (pl.preimages.size() == 1) lines.push_back(pl.dual);
    auto s = find_dual_sg_point_serial(lines, std::nullopt);
    for (int t : {2, 3, 8}) {
        auto p = find_dual_sg_point(lines, std::nullopt, t);
        CHECK(p.point == s.point);
        CHECK(p.lines == s.lines);
    }
}

TEST_CASE("oracle enumeration parallel equals serial in both modes") {
    PointSet A = generate({GenKind::Random, 12, 13, 60, 0});
    auto s_all = brute_force_ordinary_serial(A, 3, true);
    auto s_first = brute_force_ordinary_serial(A, 3, false);
    for (int t : {2, 4}) {
        auto p_all = brute_force_ordinary(A, 3, true, kDefaultSubsetBudget, t);
        REQUIRE(p_all.size() == s_all.size());
        for (size_t i = 0; i < s_all.size(); ++i) {
            CHECK(p_all[i].support == s_all[i].support);
            CHECK(p_all[i].curve == s_all[i].curve);
        }
        auto p_first = brute_force_ordinary(A, 3, false, kDefaultSubsetBudget, t);
        REQUIRE(p_first.size() == s_first.size());
        CHECK(p_first[0].support == s_first[0].support);
    }
}

TEST_CASE("thread count does not change certificates") {
    PointSet A = generate({GenKind::Random, 26, 31, 400, 0});
    auto c1 = find_ordinary_cubic(A, true, 1);
    auto c4 = find_ordinary_cubic(A, true, 4);
    CHECK(c1 == c4);
    auto k1 = find_ordinary_conic(A, 1);
    auto k4 = find_ordinary_conic(A, 4);
    CHECK(k1 == k4);
}

} // TEST_SUITE
