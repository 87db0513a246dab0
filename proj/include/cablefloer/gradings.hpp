#pragma once

/* Grading shifts of the cobordism maps between cables: the twist maps phi_k,
 * their general linking-number form, the crossing-change maps (both raw and
 * renormalized to the colored degrees), and the partial-twist swap maps.
 * Everything here is closed-form integer bookkeeping; the renormalization
 * identities are recomputed from the raw shifts rather than hard-coded.
 */

#include <stdexcept>
#include <vector>

#include "cablefloer/algebra.hpp"

namespace cf {

/* Twist map phi_k between consecutive cables: maslov -k^2-k, every Alexander
 * component -k + (n-1)/2, twist degree +1. */
inline TriGrading phi_shift(int n, int k)
{
    if (n < 1 || k < 0 || k > n - 1)
        throw std::invalid_argument("phi_shift requires 0 <= k <= n-1");
    return TriGrading{std::vector<int>(n, n - 1 - 2 * k), -k * k - k, 1};
}

/* General form for a crossing circle M with total linking lk_total and
 * per-strand linkings lk_i: A_i = (-2k-1+lk_total) * lk_i / 2. */
inline TriGrading phi_shift_general(int k, int lk_total, const std::vector<int>& lk_i)
{
    TriGrading g;
    g.maslov = -k * k - k;
    g.twist = 1;
    for (int l : lk_i)
        g.alex2.push_back((-2 * k - 1 + lk_total) * l);
    return g;
}

struct CrossingShifts {
    TriGrading g;          // positive-to-negative resolution, twist +4
    TriGrading f;          // negative-to-positive resolution, twist -2
    TriGrading g_colored;  // after renormalizing by the twist change
    TriGrading f_colored;
};

/* Both crossing-change maps carry maslov -j^2-j; the colored Alexander
 * shifts follow by subtracting (m' - m)(n-1)/2 per component, which is
 * recomputed here so the identities -2j-1+2n -> -2j+1 and 0 -> n-1 are
 * derived rather than assumed. */
inline CrossingShifts crossing_shifts(int n, int j)
{
    if (n < 1)
        throw std::invalid_argument("n >= 1 required");
    CrossingShifts cs;
    cs.g = TriGrading{std::vector<int>(n, 2 * (-2 * j - 1 + 2 * n)), -j * j - j, 4};
    cs.f = TriGrading{std::vector<int>(n, 0), -j * j - j, -2};
    auto renormalize = [n](const TriGrading& raw) {
        TriGrading col = raw;
        for (int& a2 : col.alex2)
            a2 -= raw.twist * (n - 1);  // doubled shift of (m'-m)(n-1)/2
        col.twist = 0;
        return col;
    };
    cs.g_colored = renormalize(cs.g);
    cs.f_colored = renormalize(cs.f);
    for (int a2 : cs.g_colored.alex2)
        if (a2 != 2 * (-2 * j + 1))
            throw std::logic_error("renormalization identity failed for g");
    for (int a2 : cs.f_colored.alex2)
        if (a2 != 2 * (n - 1))
            throw std::logic_error("renormalization identity failed for f");
    return cs;
}

/* Swap map for a subset Z of ordered strand pairs out of all n(n-1) ordered
 * pairs: maslov 0, Alexander shift (1/2)(sum_Z - sum_{Z^c}) of (e_i - e_j),
 * which collapses to sum_Z (e_i - e_j) since the full sum cancels; twist -2. */
inline TriGrading psi_shift(int n, const std::vector<std::pair<int, int>>& Z)
{
    TriGrading g{std::vector<int>(n, 0), 0, -2};
    for (auto& [i, j] : Z) {
        if (i < 1 || i > n || j < 1 || j > n || i == j)
            throw std::invalid_argument("bad strand pair");
        g.alex2[i - 1] += 2;
        g.alex2[j - 1] -= 2;
    }
    return g;
}

}  // namespace cf
