#pragma once

/* Finite graded presentations over F2[U_1..U_n, V_1..V_n] (optionally without
 * the U's and with an extra degree (-1,...,-1|-2) variable A on the colored
 * side).  The ring is kept free: the usual identification U_iV_i = U_jV_j is
 * imposed by explicit equalizer rows, so per-bidegree dimensions reduce to
 * monomial counting minus an exact GF(2) rank.
 */

#include <functional>
#include <string>
#include <vector>

#include "cablefloer/hfunc.hpp"

namespace cf {

struct PresGenerator {
    std::vector<int> alex2;
    int maslov = 0;
    std::string label;
};

struct PresTerm {
    std::vector<int> u, v;  // exponent vectors, length n (u all-zero when !has_u)
    int a = 0;              // exponent of A (0 when !has_a)
    int gen = 0;
};

struct PresRelation {
    std::vector<PresTerm> terms;
    int stable_m = 0;  // twist at which the relation enters the stable range (0 = always)
};

struct Presentation {
    int n = 1;
    bool has_u = true;
    bool has_a = false;
    std::vector<PresGenerator> gens;
    std::vector<PresRelation> rels;

    /* (doubled Alexander, maslov) of one term. */
    void term_degree(const PresTerm& t, std::vector<int>& alex2, int& maslov) const;
    /* Validates shape and homogeneity, then appends. */
    void add_relation(PresRelation r);
};

/* The (n,mn) torus-link module: generators Y_0..Y_{m(n-1)} on the diagonal,
 * one relation U_I Y_i = V_{I^c} Y_{i+1} per subset I of size floor(i/m)+1,
 * plus equalizer rows. */
Presentation build_torus(int n, int m);

/* Single-strand staircase complex of an L-space knot, truncated to the first
 * trunc generators: U z_i = V^{gap-1} z_{i+1}. */
Presentation build_knot(const Staircase& st, int trunc);

/* n-strand colored analogue: U_j z_i = V^{gap*1 - e_j} z_{i+1} plus
 * equalizers.  Truncation is exact for slices with maslov > -2*trunc. */
Presentation build_colored(const Staircase& st, int n, int trunc);

/* Same module presented over F[V_1..V_n, A]: z_i A = z_{i+1} (V_1..V_n)^{gap-1}. */
Presentation build_tensor(const Staircase& st, int n, int trunc);

/* Default truncation depth for a window whose smallest degree is lo. */
int default_trunc(const Staircase& st, int lo);

/* Dimension of the presented module in one (Alexander, maslov) slice. */
int graded_dim(const Presentation& p, const std::vector<int>& alex2, int d);

struct Slice {
    std::vector<int> alex2;
    int d = 0;
};

/* Lexicographic slices over a coordinate box (doubled, step 2) times a maslov
 * interval; this is the canonical report order. */
std::vector<Slice> box_slices(int n, int lo2, int hi2, int dlo, int dhi);

std::vector<int> dim_scan_serial(const Presentation& p, const std::vector<Slice>& slices);
std::vector<int> dim_scan(const Presentation& p, const std::vector<Slice>& slices, int threads);

struct Discrepancy {
    Slice slice;
    int got = 0, want = 0;
};

/* Compares presentation dimensions against a closed-form oracle. */
std::vector<Discrepancy> oracle_scan(const Presentation& p, const std::vector<Slice>& slices,
                                     const std::function<int(const Slice&)>& oracle, int threads);

/* Human-readable rows ("U1 zt3 = V2 (V1 V2)^2 zt0"), optionally annotated
 * with the stable-twist onset. */
std::vector<std::string> relation_lines(const Presentation& p, bool annotate);

}  // namespace cf
