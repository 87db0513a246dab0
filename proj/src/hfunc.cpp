#include "cablefloer/hfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "cablefloer/parallel.hpp"

namespace cf {

Staircase staircase_from_delta(const LaurentPoly& delta)
{
    validate_alexander(delta);
    Staircase st;
    st.genus = delta.max_exp2() / 2;
    const int g = st.genus;
    /* Check chi coefficients on a window reaching well past the forced tail. */
    const int floor2 = -2 * g - 16;
    TruncatedSeries chi = chi_series(delta, floor2);
    for (int e2 = 2 * g; e2 >= floor2; e2 -= 2) {
        coef_t c = chi.at2(e2);
        if (c != 0 && c != 1)
            throw std::invalid_argument("not an L-space staircase: chi coefficient outside {0,1}");
        int s = e2 / 2;
        if (s <= -g && c != 1)
            throw std::invalid_argument("not an L-space staircase: missing tail exponent");
        if (s > -g && c == 1)
            st.head.push_back(s);
    }
    std::sort(st.head.begin(), st.head.end(), std::greater<int>());
    if (static_cast<int>(st.head.size()) != g)
        throw std::invalid_argument("not an L-space staircase: head size != genus");
    if (g > 0 && st.head.front() != g)
        throw std::invalid_argument("not an L-space staircase: top exponent != genus");
    return st;
}

int staircase_sigma(const Staircase& st, int i)
{
    if (i < 1)
        throw std::invalid_argument("staircase_sigma: index is 1-based");
    if (i <= static_cast<int>(st.head.size()))
        return st.head[i - 1];
    return 1 - i;
}

int HKnot::h(int s) const
{
    const int g = st_.genus;
    int cnt = 0;
    for (int v : st_.head)
        if (v > s)
            ++cnt;
        else
            break;  // head is descending
    if (s < -g)
        cnt += -s - g;  // tail exponents -g, -g-1, ..., s+1
    return cnt;
}

int lspace_threshold(const HKnot& k)
{
    return std::max(1, 2 * k.genus() - 1);
}

static void check_lattice(int n, int m, const std::vector<int>& s2)
{
    if (n < 1 || m < 0)
        throw std::invalid_argument("cable parameters require n >= 1, m >= 0");
    if (static_cast<int>(s2.size()) != n)
        throw std::invalid_argument("Alexander multi-degree has wrong length");
    const int par = (m * (n - 1)) & 1;
    for (int v : s2)
        if ((v & 1) != par)
            throw std::invalid_argument("Alexander multi-degree off the cable lattice");
}

int h_torus(int n, int m, const std::vector<int>& s2)
{
    check_lattice(n, m, s2);
    std::vector<int> v(s2);
    std::sort(v.begin(), v.end());
    const int c2 = m * (n - 1);
    int h = 0;
    for (int i = 0; i < n; ++i) {
        int x = (v[i] - c2) / 2 + i * m;
        if (x < 0)
            h += -x;
    }
    return h;
}

int h_cable(const HKnot& k, int n, int m, const std::vector<int>& s2)
{
    check_lattice(n, m, s2);
    std::vector<int> v(s2);
    std::sort(v.begin(), v.end());
    const int c2 = m * (n - 1);
    int h = 0;
    for (int i = 0; i < n; ++i)
        h += k.h((v[i] - c2) / 2 + i * m);
    return h;
}

int h_stab(const HKnot& k, int n, int m, const std::vector<int>& sbar)
{
    std::vector<int> s2(sbar.size());
    const int c2 = m * (n - 1);
    for (std::size_t i = 0; i < sbar.size(); ++i)
        s2[i] = 2 * sbar[i] + c2;
    return h_cable(k, n, m, s2);
}

int h_colored(const HKnot& k, const std::vector<int>& sbar)
{
    if (sbar.empty())
        throw std::invalid_argument("empty multi-degree");
    return k.h(*std::min_element(sbar.begin(), sbar.end()));
}

int h_stab_onset(const HKnot& k, int n, const std::vector<int>& sbar)
{
    const int target = h_colored(k, sbar);
    int mn = *std::min_element(sbar.begin(), sbar.end());
    int bound = std::max(1, k.genus() - mn);  // h_stab == h_colored from here on
    int onset = 1;
    for (int m = bound; m >= 1; --m) {
        if (h_stab(k, n, m, sbar) != target) {
            onset = m + 1;
            break;
        }
    }
    return onset;
}

std::size_t box_size(int n, int lo, int hi)
{
    if (hi < lo)
        return 0;
    std::size_t w = static_cast<std::size_t>(hi - lo + 1), total = 1;
    for (int i = 0; i < n; ++i)
        total *= w;
    return total;
}

std::vector<int> box_point(int n, int lo, int hi, std::size_t idx)
{
    const std::size_t w = static_cast<std::size_t>(hi - lo + 1);
    std::vector<int> p(n);
    for (int i = n - 1; i >= 0; --i) {
        p[i] = lo + static_cast<int>(idx % w);
        idx /= w;
    }
    return p;
}

std::vector<int> h_stab_grid_serial(const HKnot& k, int n, int m, int lo, int hi)
{
    std::size_t total = box_size(n, lo, hi);
    std::vector<int> out(total);
    for (std::size_t i = 0; i < total; ++i)
        out[i] = h_stab(k, n, m, box_point(n, lo, hi, i));
    return out;
}

std::vector<int> h_stab_grid(const HKnot& k, int n, int m, int lo, int hi, int threads)
{
    std::size_t total = box_size(n, lo, hi);
    std::vector<int> out(total);
    parallel_for(total, threads,
                 [&](std::size_t i) { out[i] = h_stab(k, n, m, box_point(n, lo, hi, i)); });
    return out;
}

}  // namespace cf
