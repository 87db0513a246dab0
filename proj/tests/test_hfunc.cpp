#include "doctest.h"

#include <algorithm>
#include <random>

#include "cablefloer/hfunc.hpp"
#include "cablefloer/presets.hpp"

using namespace cf;

namespace {

HKnot t34() { return HKnot::from_delta(knot_preset("T(3,4)")); }
HKnot t23() { return HKnot::from_delta(knot_preset("T(2,3)")); }
HKnot unknot() { return HKnot::from_delta(knot_preset("unknot")); }

/* The published stabilized grid for the (2,12)-cable of T(3,4): rows are
 * sbar_2 = 5 down to -5, columns sbar_1 = 5 down to -5. */
const int kGrid34[11][11] = {
    {0, 0, 0, 1, 1, 1, 2, 3, 3, 4, 5},  // sbar_2 = 5
    {0, 0, 0, 1, 1, 1, 2, 3, 3, 4, 5},  //          4
    {0, 0, 0, 1, 1, 1, 2, 3, 3, 4, 5},  //          3
    {1, 1, 1, 1, 1, 1, 2, 3, 3, 4, 5},  //          2
    {1, 1, 1, 1, 1, 1, 2, 3, 3, 4, 5},  //          1
    {1, 1, 1, 1, 1, 1, 2, 3, 3, 4, 5},  //          0
    {2, 2, 2, 2, 2, 2, 2, 3, 3, 4, 5},  //         -1
    {3, 3, 3, 3, 3, 3, 3, 3, 3, 4, 5},  //         -2
    {3, 3, 3, 3, 3, 3, 3, 3, 3, 4, 5},  //         -3
    {4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 6},  //         -4
    {5, 5, 5, 5, 5, 5, 5, 5, 5, 6, 6},  //         -5
};

}  // namespace

TEST_CASE("staircase_from_delta: torus knots and the unknot")
{
    Staircase s34 = t34().staircase();
    CHECK(s34.genus == 3);
    CHECK(s34.head == std::vector<int>{3, 0, -1});

    Staircase s0 = unknot().staircase();
    CHECK(s0.genus == 0);
    CHECK(s0.head.empty());

    Staircase s23 = t23().staircase();
    CHECK(s23.genus == 1);
    CHECK(s23.head == std::vector<int>{1});
}

TEST_CASE("staircase_from_delta rejects non-staircase input")
{
    /* symmetric, evaluates to 1, but chi coefficient -1 at exponent 1 */
    LaurentPoly bad = parse_poly("t^2 - 2t + 3 - 2t^-1 + t^-2");
    CHECK(bad.eval_at_one() == 1);
    CHECK(bad.symmetric());
    CHECK_THROWS_AS(staircase_from_delta(bad), std::invalid_argument);
    CHECK_THROWS_AS(staircase_from_delta(parse_poly("t^2")), std::invalid_argument);
}

TEST_CASE("staircase_sigma enumerates head then tail")
{
    Staircase s = t34().staircase();
    CHECK(staircase_sigma(s, 1) == 3);
    CHECK(staircase_sigma(s, 2) == 0);
    CHECK(staircase_sigma(s, 3) == -1);
    CHECK(staircase_sigma(s, 4) == -3);
    CHECK(staircase_sigma(s, 5) == -4);
    CHECK(staircase_sigma(s, 9) == -8);
    CHECK_THROWS_AS(staircase_sigma(s, 0), std::invalid_argument);
}

TEST_CASE("h: golden tables")
{
    HKnot k = t34();
    const int want[] = {5, 4, 3, 3, 2, 1, 1, 1, 0, 0, 0};
    for (int s = -5; s <= 5; ++s)
        CHECK(k.h(s) == want[s + 5]);

    HKnot o = unknot();
    for (int s = -6; s <= 6; ++s)
        CHECK(o.h(s) == std::max(0, -s));

    CHECK(t23().h(0) == 1);
    CHECK(t23().h(-2) == 2);
}

TEST_CASE("h: staircase interpolation properties")
{
    for (const char* name : {"T(3,4)", "T(2,3)", "T(2,7)", "T(3,5)", "unknot"}) {
        HKnot k = HKnot::from_delta(knot_preset(name));
        int g = k.genus();
        CAPTURE(name);
        for (int i = 1; i <= 8; ++i)
            CHECK(k.h(staircase_sigma(k.staircase(), i)) == i - 1);
        for (int s = -g - 6; s <= g + 6; ++s) {
            int step = k.h(s - 1) - k.h(s);
            CHECK((step == 0 || step == 1));
        }
        for (int s = -g - 5; s <= g + 5; ++s)
            CHECK(k.h(-s) == k.h(s) + s);
        CHECK(k.h(g) == 0);
        CHECK(k.h(-g - 3) == g + 3);
    }
}

TEST_CASE("h steps recover the staircase exponents")
{
    for (const char* name : {"T(3,4)", "T(2,5)"}) {
        HKnot k = HKnot::from_delta(knot_preset(name));
        std::vector<int> steps;  // s where h(s-1) - h(s) = 1, scanned downward
        for (int s = k.genus(); s >= -k.genus() - 4; --s)
            if (k.h(s - 1) - k.h(s) == 1)
                steps.push_back(s);
        std::vector<int> sigmas;
        for (int i = 1; i <= static_cast<int>(steps.size()); ++i)
            sigmas.push_back(staircase_sigma(k.staircase(), i));
        CHECK(steps == sigmas);
    }
}

TEST_CASE("h_torus: diagonal closed form and vanishing")
{
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 5; ++m) {
            const int c2 = m * (n - 1);
            for (int i = 0; i <= m * (n - 1); ++i) {
                int q = i / m, r = i % m;
                std::vector<int> s2(n, c2 - 2 * i);
                CHECK(2 * h_torus(n, m, s2) == (q + 1) * (q * m + 2 * r));
            }
            CHECK(h_torus(n, m, std::vector<int>(n, c2)) == 0);
            CHECK(h_torus(n, m, std::vector<int>(n, c2 + 4)) == 0);
        }
    /* n=2, m=3, s=(-3/2,5/2): sorted contributions h0(-3) + h0(4) */
    CHECK(h_torus(2, 3, {-3, 5}) == 3);
    CHECK_THROWS_AS(h_torus(2, 3, {-2, 5}), std::invalid_argument);  // off lattice
    CHECK_THROWS_AS(h_torus(2, 3, {-3}), std::invalid_argument);
}

TEST_CASE("h_cable with unknot input reproduces h_torus")
{
    HKnot o = unknot();
    std::mt19937 rng(11u);
    std::uniform_int_distribution<int> nd(1, 4), md(0, 6), sd(-9, 9);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = nd(rng), m = md(rng);
        int c2 = m * (n - 1);
        std::vector<int> s2(n);
        for (int& v : s2)
            v = 2 * sd(rng) + c2;
        CHECK(h_cable(o, n, m, s2) == h_torus(n, m, s2));
    }
}

TEST_CASE("h_cable is permutation invariant")
{
    HKnot k = t34();
    std::mt19937 rng(13u);
    std::uniform_int_distribution<int> sd(-8, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> s2(3);
        for (int& v : s2)
            v = 2 * sd(rng);  // n=3, m=2: lattice offset 4 is even
        std::vector<int> perm = s2;
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(h_cable(k, 3, 2, s2) == h_cable(k, 3, 2, perm));
    }
}

TEST_CASE("h_stab: the published 11x11 grid and twist corrections")
{
    HKnot k = t34();
    for (int s2 = 5; s2 >= -5; --s2)
        for (int s1 = 5; s1 >= -5; --s1) {
            CAPTURE(s1);
            CAPTURE(s2);
            CHECK(h_stab(k, 2, 6, {s1, s2}) == kGrid34[5 - s2][5 - s1]);
        }

    CHECK(h_stab(k, 2, 6, {-4, -4}) == 5);
    CHECK(h_stab(k, 2, 7, {-4, -4}) == 4);
    CHECK(h_stab(k, 2, 7, {-4, -5}) == 5);
    CHECK(h_stab(k, 2, 7, {-5, -5}) == 6);
    CHECK(h_stab(k, 2, 8, {-5, -5}) == 5);
    CHECK(h_stab(k, 2, 9, {-5, -5}) == 5);
}

TEST_CASE("h_stab: point values")
{
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            CHECK(h_stab(unknot(), n, m, std::vector<int>(n, 0)) == 0);
    CHECK(h_stab(t23(), 3, 4, {-1, 0, 2}) == 1);
    CHECK(h_stab(t34(), 2, 6, {3, 3}) == 0);
}

TEST_CASE("h_colored: large-twist limit values")
{
    CHECK(h_colored(t34(), {-1, 4}) == 2);
    CHECK(h_colored(t34(), {3, 3}) == 0);
    CHECK(h_colored(t34(), {5, -5, 0}) == 5);
    CHECK(h_colored(unknot(), {2, -3}) == 3);
    for (int s = 3; s <= 6; ++s)
        CHECK(h_colored(t34(), {s, s + 1}) == 0);
}

TEST_CASE("h_stab converges to h_colored on the stable region")
{
    for (const char* name : {"T(3,4)", "T(2,3)", "unknot"}) {
        HKnot k = HKnot::from_delta(knot_preset(name));
        int g = k.genus(), m = 2 * g + 6;
        CAPTURE(name);
        for (int a = g - m + 1; a <= g; ++a)
            for (int b = a; b <= g; ++b)
                CHECK(h_stab(k, 2, m, {a, b}) == h_colored(k, {a, b}));
    }
}

TEST_CASE("h_stab is monotone in m, with equality past the stable bound")
{
    HKnot k = t34();
    const int g = k.genus();
    for (int m = 1; m <= 10; ++m)
        for (int a = -6; a <= 6; ++a)
            for (int b = a; b <= 6; ++b) {
                int now = h_stab(k, 2, m, {a, b});
                int next = h_stab(k, 2, m + 1, {a, b});
                CHECK(next <= now);
                if (a >= g - m)
                    CHECK(next == now);
            }
}

TEST_CASE("h_stab_onset matches a brute-force scan")
{
    auto brute = [](const HKnot& k, int n, const std::vector<int>& sbar) {
        int hc = h_colored(k, sbar);
        int m0 = 1;
        for (int m = 40; m >= 1; --m)
            if (h_stab(k, n, m, sbar) != hc) {
                m0 = m + 1;
                break;
            }
        return m0;
    };
    HKnot k = t34(), o = unknot();
    CHECK(h_stab_onset(k, 2, {-4, -4}) == 7);
    CHECK(h_stab_onset(k, 2, {-5, -5}) == 8);
    CHECK(h_stab_onset(k, 2, {-3, -3}) == 6);
    CHECK(h_stab_onset(o, 2, {-5, -5}) == 5);
    std::mt19937 rng(17u);
    std::uniform_int_distribution<int> sd(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<int> sbar{sd(rng), sd(rng)};
        CAPTURE(sbar[0]);
        CAPTURE(sbar[1]);
        CHECK(h_stab_onset(k, 2, sbar) == brute(k, 2, sbar));
        CHECK(h_stab_onset(o, 2, sbar) == brute(o, 2, sbar));
    }
}

TEST_CASE("box enumeration is lexicographic with the last coordinate fastest")
{
    CHECK(box_size(2, -1, 1) == 9);
    CHECK(box_point(2, -1, 1, 0) == std::vector<int>{-1, -1});
    CHECK(box_point(2, -1, 1, 1) == std::vector<int>{-1, 0});
    CHECK(box_point(2, -1, 1, 3) == std::vector<int>{0, -1});
    CHECK(box_point(2, -1, 1, 8) == std::vector<int>{1, 1});
    CHECK(box_point(3, 0, 1, 1) == std::vector<int>{0, 0, 1});
}

TEST_CASE("h_stab grids: parallel equals serial")
{
    HKnot k = t34();
    std::vector<int> serial = h_stab_grid_serial(k, 2, 6, -5, 5);
    REQUIRE(serial.size() == 121);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        std::vector<int> p = box_point(2, -5, 5, i);
        CHECK(serial[i] == kGrid34[5 - p[1]][5 - p[0]]);
    }
    CHECK(h_stab_grid(k, 2, 6, -5, 5, 1) == serial);
    CHECK(h_stab_grid(k, 2, 6, -5, 5, 4) == serial);
    CHECK(h_stab_grid(k, 3, 4, -4, 3, 4) == h_stab_grid_serial(k, 3, 4, -4, 3));
}

TEST_CASE("lspace_threshold scales with genus")
{
    CHECK(lspace_threshold(unknot()) == 1);
    CHECK(lspace_threshold(t23()) == 1);
    CHECK(lspace_threshold(t34()) == 5);
}
