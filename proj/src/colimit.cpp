#include "cablefloer/colimit.hpp"

#include <stdexcept>

namespace cf {

std::map<DegreeKey, ColimitReport> colimit_dims(const DirectedSystem& sys, int window)
{
    if (window < 1)
        throw std::invalid_argument("window must be >= 1");
    std::map<DegreeKey, ColimitReport> out;
    for (auto& [key, deg] : sys.degrees) {
        const int stages = static_cast<int>(deg.dims.size());
        if (stages == 0)
            throw std::invalid_argument("degree with no stages");
        if (stages < window + 1)
            throw std::invalid_argument("stabilization window exceeds the stage range");
        if (static_cast<int>(deg.maps.size()) != stages - 1)
            throw std::invalid_argument("map count must be stages-1");
        for (int i = 0; i + 1 < stages; ++i)
            if (deg.maps[i].rows() != deg.dims[i + 1] || deg.maps[i].cols() != deg.dims[i])
                throw std::invalid_argument("map shape mismatch");

        /* ranks of the composites into the last stage, right to left */
        std::vector<int> r(stages);
        Gf2Matrix acc = Gf2Matrix::identity(deg.dims[stages - 1]);
        r[stages - 1] = deg.dims[stages - 1];
        for (int i = stages - 2; i >= 0; --i) {
            acc = acc * deg.maps[i];
            r[i] = acc.rank();
        }

        ColimitReport rep;
        const int wstart = stages - 1 - window;
        rep.dim = r[wstart];
        rep.stabilized = true;
        for (int i = wstart; i <= stages - 1 && rep.stabilized; ++i)
            if (r[i] != r[wstart] || deg.dims[i] != deg.dims[wstart])
                rep.stabilized = false;

        if (deg.onset_hint >= 0) {
            rep.first_stable_m = deg.onset_hint;
        } else {
            int onset = stages - 1;
            while (onset > 0 && r[onset - 1] == r[stages - 1] &&
                   deg.dims[onset - 1] == deg.dims[stages - 1])
                --onset;
            rep.first_stable_m = deg.m_lo + onset;
        }
        out.emplace(key, rep);
    }
    return out;
}

static int tower_dim(int h, int d)
{
    int top = -2 * h;
    return (d <= top && (top - d) % 2 == 0) ? 1 : 0;
}

DirectedSystem lspace_phi0_system(const HKnot& hk, int n, const std::vector<DegreeKey>& degrees,
                                  int m_lo, int m_hi)
{
    if (m_lo < 1 || m_hi < m_lo)
        throw std::invalid_argument("twist range requires 1 <= m_lo <= m_hi");
    DirectedSystem sys;
    for (const DegreeKey& key : degrees) {
        if (static_cast<int>(key.sbar.size()) != n)
            throw std::invalid_argument("degree multi-index has wrong length");
        DegreeSystem deg;
        deg.m_lo = m_lo;
        for (int m = m_lo; m <= m_hi; ++m)
            deg.dims.push_back(tower_dim(h_stab(hk, n, m, key.sbar), key.d));
        for (int i = 0; i + 1 < static_cast<int>(deg.dims.size()); ++i) {
            Gf2Matrix f(deg.dims[i + 1], deg.dims[i]);
            if (deg.dims[i] == 1 && deg.dims[i + 1] == 1)
                f.set(0, 0, true);  // identity on towers
            deg.maps.push_back(std::move(f));
        }
        deg.onset_hint = h_stab_onset(hk, n, key.sbar);
        sys.degrees.emplace(key, std::move(deg));
    }
    return sys;
}

bool shifted_map_compat(const std::vector<Gf2Matrix>& f, const std::vector<Gf2Matrix>& g,
                        const std::vector<Gf2Matrix>& h, int s)
{
    if (s < 0)
        throw std::invalid_argument("negative index shift");
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        if (i >= f.size() || i + s >= g.size())
            break;
        if (!(g[i + s] * h[i] == h[i + 1] * f[i]))
            return false;
    }
    return true;
}

}  // namespace cf
