#pragma once

/* h-functions of L-space knots and their cables.  A staircase records the
 * exponent set S of chi_K = sum_{sigma in S} t^sigma; h(s) counts the
 * exponents above s, and every cable-level h is a sorted sum of shifted
 * single-variable evaluations.  All multi-variable Alexander degrees are
 * carried doubled (s2) so half-integer lattices stay integral; the sbar
 * variants use the renormalized integer coordinates sbar = s - c_m * 1.
 */

#include <vector>

#include "cablefloer/laurent.hpp"

namespace cf {

struct Staircase {
    int genus = 0;
    std::vector<int> head;  // exponents sigma_1 > ... > sigma_g above -g; tail is sigma_i = 1-i

    bool operator==(const Staircase& o) const = default;
};

/* Validates delta as an L-space staircase polynomial: delta(1)=1, symmetric,
 * chi coefficients all 0/1 with the forced tail, exactly g head exponents. */
Staircase staircase_from_delta(const LaurentPoly& delta);

/* Enumerated exponent sigma_i (1-based). */
int staircase_sigma(const Staircase& st, int i);

class HKnot {
public:
    HKnot() = default;
    explicit HKnot(Staircase st) : st_(std::move(st)) {}
    static HKnot from_delta(const LaurentPoly& delta) { return HKnot(staircase_from_delta(delta)); }

    const Staircase& staircase() const { return st_; }
    int genus() const { return st_.genus; }

    int h(int s) const;  // |{sigma in S : sigma > s}|

private:
    Staircase st_;
};

/* Twist threshold below which the cable need not be an L-space link. */
int lspace_threshold(const HKnot& k);

/* h of the (n,mn) torus link at a lattice point (doubled coords, each
 * s2_i == m(n-1) mod 2): sort ascending and sum max(0, -x) over the shifted
 * entries x_i = (s2_(i) - m(n-1))/2 + (i-1)m. */
int h_torus(int n, int m, const std::vector<int>& s2);

/* Same shape with h_K in place of max(0,-x). */
int h_cable(const HKnot& k, int n, int m, const std::vector<int>& s2);

/* Renormalized coordinates: h_cable at s2_i = 2*sbar_i + m(n-1). */
int h_stab(const HKnot& k, int n, int m, const std::vector<int>& sbar);

/* Large-twist limit: h_K(min sbar). */
int h_colored(const HKnot& k, const std::vector<int>& sbar);

/* Smallest m0 >= 1 with h_stab(m, sbar) == h_colored(sbar) for all m >= m0. */
int h_stab_onset(const HKnot& k, int n, const std::vector<int>& sbar);

/* Row-major grids over the box [lo, hi]^n of sbar values, last coordinate
 * fastest.  The parallel version must agree bit-for-bit with the serial one. */
std::vector<int> h_stab_grid_serial(const HKnot& k, int n, int m, int lo, int hi);
std::vector<int> h_stab_grid(const HKnot& k, int n, int m, int lo, int hi, int threads);

/* Unrank index -> box point, the ordering used by the grids. */
std::vector<int> box_point(int n, int lo, int hi, std::size_t idx);
std::size_t box_size(int n, int lo, int hi);

}  // namespace cf
