#pragma once

/* The cable algebra on n strands: commuting generators a_0..a_{n-1} over
 * F[U_1..U_n, V_1..V_n] with U_iV_i identified, together with its
 * localization at a_0 (the "colored" side).  Every graded piece in sight is
 * a rank-one tower, so elements are tracked as canonical basis data
 * (twist m, Alexander multidegree, tower depth k) rather than by term
 * rewriting; products and operator actions are pure grading bookkeeping with
 * non-negativity of the depth as the built-in sanity check.
 */

#include <optional>
#include <string>
#include <vector>

#include "cablefloer/hfunc.hpp"

namespace cf {

struct TriGrading {
    std::vector<int> alex2;  // doubled Alexander multi-degree
    int maslov = 0;
    int twist = 0;

    bool operator==(const TriGrading& o) const = default;
    TriGrading operator+(const TriGrading& o) const;
};

/* U^k times the top of the rank-one tower at twist m and multidegree s2
 * (doubled, on the lattice s2_i == m(n-1) mod 2). */
struct TowerBasisElt {
    int n = 0;
    int m = 0;
    std::vector<int> s2;
    int k = 0;

    bool operator==(const TowerBasisElt& o) const = default;
};

/* U^k times the top of the colored tower at integer multidegree sbar. */
struct ColoredBasisElt {
    std::vector<int> sbar;
    int k = 0;

    bool operator==(const ColoredBasisElt& o) const = default;
};

TowerBasisElt alg_unit(int n);
TowerBasisElt gen_a(int n, int j);  // 0 <= j <= n-1; twist 1, diagonal degree, depth 0

TriGrading tower_grading(const TowerBasisElt& x);  // maslov = -2 h_torus - 2k
TriGrading colored_grading(const HKnot& hk, const ColoredBasisElt& x);

/* Product in the algebra: degrees add, depth picks up
 * h(m,s) + h(m',s') - h(m+m', s+s') >= 0. */
TowerBasisElt mul(const TowerBasisElt& x, const TowerBasisElt& y);

/* Module actions of the ring variables (i is 1-based). */
TowerBasisElt act_u(const TowerBasisElt& x, int i);
TowerBasisElt act_v(const TowerBasisElt& x, int i);
TowerBasisElt act_uu(const TowerBasisElt& x);  // central U = U_iV_i

/* U_I a_{|I|-1} == V_{complement(I)} a_{|I|}, elements of I 1-based. */
bool verify_linear(int n, const std::vector<int>& I);
bool verify_linear_all(int n);

/* a_i a_j == U^{kl-ij} a_k a_l whenever i+j == k+l, i <= k <= l <= j. */
bool verify_quadratic(int n, int i, int j, int k, int l);
bool verify_quadratic_all(int n);

/* a_q^{m-r} a_{q+1}^r lands on the tower top Y_i (i = qm+r) with Alexander
 * degree (c - i)*1 and maslov -(q+1)(qm+2r), for every twist m <= max_m. */
bool verify_tower_gradings(int n, int max_m);

/* Words in the generators and ring variables. */
struct Letter {
    enum Kind { GenA, OpU, OpV, OpUU, OpA } kind;
    int index = 0;  // generator subscript for GenA, 1-based strand for OpU/OpV
};
TowerBasisElt word_to_basis(int n, const std::vector<Letter>& word);

/* "a0 a1 U1 V2 U" -> letters; "A" only meaningful on the colored side. */
std::vector<Letter> parse_word(const std::string& text, int n);

/* Colored module action for letters OpU/OpV/OpUU/OpA. */
ColoredBasisElt colored_act(const HKnot& hk, const Letter& op, const ColoredBasisElt& x);

/* Image of a stable tower generator in the colored module.  The depth shift
 * h_stab - h_colored is forced by the Maslov grading; the flag records
 * whether the twist has reached the verified regime for this knot. */
struct LocalizeResult {
    ColoredBasisElt elt;
    bool regime_verified;
};
LocalizeResult localize(const TowerBasisElt& x, const HKnot& hk);

/* Dimension of the colored homology at (sbar, maslov d): 1 iff
 * d = -2 h_K(min sbar) - 2k for some k >= 0. */
int colored_dim(const HKnot& hk, int n, const std::vector<int>& sbar, int d);

}  // namespace cf
