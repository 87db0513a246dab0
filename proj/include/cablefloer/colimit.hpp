#pragma once

/* Directed systems of finite-dimensional F2 spaces indexed by increasing
 * twist, one system per (multidegree, maslov) pair.  The colimit dimension is
 * certified through ranks of the composites into the last stage: once those
 * ranks and the stage dimensions are constant across a trailing window the
 * reported value is stable.
 */

#include <map>
#include <vector>

#include "cablefloer/algebra.hpp"
#include "cablefloer/gf2.hpp"

namespace cf {

struct DegreeKey {
    std::vector<int> sbar;
    int d = 0;

    bool operator<(const DegreeKey& o) const
    {
        if (sbar != o.sbar)
            return sbar < o.sbar;
        return d < o.d;
    }
    bool operator==(const DegreeKey& o) const = default;
};

struct DegreeSystem {
    int m_lo = 0;
    std::vector<int> dims;        // dims[i] = dim at twist m_lo + i
    std::vector<Gf2Matrix> maps;  // maps[i] : stage i -> stage i+1
    int onset_hint = -1;          // known model onset (absolute twist), -1 if none
};

struct DirectedSystem {
    std::map<DegreeKey, DegreeSystem> degrees;
};

struct ColimitReport {
    int dim = 0;
    bool stabilized = false;
    int first_stable_m = 0;
};

std::map<DegreeKey, ColimitReport> colimit_dims(const DirectedSystem& sys, int window);

/* Tower model of the twist maps on a cable of an L-space knot: at each
 * (sbar, d) the stage dimension is 0/1 by h_stab and the connecting map is
 * the identity on towers whenever source and target are nonzero. */
DirectedSystem lspace_phi0_system(const HKnot& hk, int n, const std::vector<DegreeKey>& degrees,
                                  int m_lo, int m_hi);

/* Checks the squares g_{i+s} h_i == h_{i+1} f_i for all stages where both
 * sides are defined; this is what induces a map on colimits. */
bool shifted_map_compat(const std::vector<Gf2Matrix>& f, const std::vector<Gf2Matrix>& g,
                        const std::vector<Gf2Matrix>& h, int s);

}  // namespace cf
