#include "doctest.h"

#include "cablefloer/gradings.hpp"

using namespace cf;

TEST_CASE("phi_shift: twist map degrees")
{
    TriGrading p20 = phi_shift(2, 0);
    CHECK(p20.alex2 == std::vector<int>{1, 1});
    CHECK(p20.maslov == 0);
    CHECK(p20.twist == 1);

    TriGrading p43 = phi_shift(4, 3);
    CHECK(p43.alex2 == std::vector<int>(4, -3));
    CHECK(p43.maslov == -12);
    CHECK(p43.twist == 1);

    for (int n = 1; n <= 6; ++n) {
        CHECK(phi_shift(n, 0).maslov == 0);
        CHECK(phi_shift(n, 0).alex2 == std::vector<int>(n, n - 1));
    }

    CHECK_THROWS_AS(phi_shift(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(phi_shift(3, -1), std::invalid_argument);
    CHECK_THROWS_AS(phi_shift(0, 0), std::invalid_argument);
}

TEST_CASE("phi_shift is realized by multiplication with a_k")
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n - 1; ++k)
            CHECK(tower_grading(gen_a(n, k)) == phi_shift(n, k));
}

TEST_CASE("phi_shift_general: specializations")
{
    /* unit linkings recover the cable twist maps */
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n - 1; ++k)
            CHECK(phi_shift_general(k, n, std::vector<int>(n, 1)) == phi_shift(n, k));

    /* a crossing circle linking nothing shifts no Alexander degree */
    TriGrading null = phi_shift_general(2, 0, std::vector<int>(3, 0));
    CHECK(null.alex2 == std::vector<int>(3, 0));
    CHECK(null.maslov == -6);

    /* doubled linkings reproduce the raw positive crossing-change shift */
    for (int n = 1; n <= 5; ++n)
        for (int j = 0; j <= 4; ++j)
            CHECK(phi_shift_general(j, 2 * n, std::vector<int>(n, 2)).alex2 ==
                  crossing_shifts(n, j).g.alex2);
}

TEST_CASE("crossing_shifts: raw and renormalized degrees")
{
    CrossingShifts c10 = crossing_shifts(1, 0);
    CHECK(c10.g.alex2 == std::vector<int>{2});
    CHECK(c10.g.twist == 4);
    CHECK(c10.f.alex2 == std::vector<int>{0});
    CHECK(c10.f.twist == -2);
    CHECK(c10.g_colored.alex2 == std::vector<int>{2});
    CHECK(c10.f_colored.alex2 == std::vector<int>{0});

    CrossingShifts c21 = crossing_shifts(2, 1);
    CHECK(c21.g.alex2 == std::vector<int>{2, 2});
    CHECK(c21.g.maslov == -2);
    CHECK(c21.f.maslov == -2);
    CHECK(c21.g_colored.alex2 == std::vector<int>{-2, -2});
    CHECK(c21.g_colored.twist == 0);
    CHECK(c21.f_colored.alex2 == std::vector<int>{2, 2});

    /* the colored forms are recomputed from the raw shifts; a sweep over
     * (n, j) exercises the internal identity checks */
    for (int n = 1; n <= 8; ++n)
        for (int j = 0; j <= 6; ++j) {
            CrossingShifts cs = crossing_shifts(n, j);
            CHECK(cs.g_colored.alex2 == std::vector<int>(n, 2 * (-2 * j + 1)));
            CHECK(cs.f_colored.alex2 == std::vector<int>(n, 2 * (n - 1)));
            CHECK(cs.g_colored.maslov == -j * j - j);
        }
    CHECK_THROWS_AS(crossing_shifts(0, 1), std::invalid_argument);
}

TEST_CASE("psi_shift: swap maps")
{
    TriGrading one = psi_shift(2, {{1, 2}});
    CHECK(one.alex2 == std::vector<int>{2, -2});
    CHECK(one.maslov == 0);
    CHECK(one.twist == -2);

    CHECK(psi_shift(3, {}).alex2 == std::vector<int>(3, 0));

    /* the full set of ordered pairs cancels strand by strand */
    for (int n = 2; n <= 5; ++n) {
        std::vector<std::pair<int, int>> all;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j)
                    all.push_back({i, j});
        CHECK(psi_shift(n, all).alex2 == std::vector<int>(n, 0));
    }

    CHECK_THROWS_AS(psi_shift(2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(psi_shift(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(psi_shift(2, {{1, 3}}), std::invalid_argument);
}
