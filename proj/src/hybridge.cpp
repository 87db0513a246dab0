#include "cablefloer/hybridge.hpp"

#include <stdexcept>

namespace cf {

void MultiPoly::add_term(const std::vector<int>& e, long long c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(int nvars, long long c)
{
    MultiPoly p(nvars);
    p.add_term(std::vector<int>(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::var(int nvars, int i)
{
    if (i < 0 || i >= nvars)
        throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("mixed variable counts");
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("mixed variable counts");
    MultiPoly r = *this;
    for (auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("mixed variable counts");
    MultiPoly r(nvars_);
    std::vector<int> e(nvars_);
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i)
                e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("negative power");
    MultiPoly r = constant(nvars_, 1);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const
{
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("need one image per variable");
    int target = images.empty() ? 0 : images[0].nvars_;
    for (auto& im : images)
        if (im.nvars_ != target)
            throw std::invalid_argument("images live in different rings");
    MultiPoly out(target);
    for (auto& [e, c] : terms_) {
        MultiPoly term = constant(target, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i])
                term = term * images[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

MultiPoly elementary_symmetric(int nvars, const std::vector<int>& vars, int m)
{
    if (m < 0)
        return MultiPoly(nvars);
    /* DP over the variable list: e_k(x_1..x_t) = e_k(..t-1) + x_t e_{k-1}(..t-1) */
    std::vector<MultiPoly> e(m + 1, MultiPoly(nvars));
    e[0] = MultiPoly::constant(nvars, 1);
    for (int v : vars) {
        MultiPoly x = MultiPoly::var(nvars, v);
        for (int k = m; k >= 1; --k)
            e[k] = e[k] + x * e[k - 1];
    }
    return e[m];
}

bool verify_hy(int n)
{
    if (n < 1)
        throw std::invalid_argument("n >= 1 required");
    /* source ring: u_0..u_{n-1}, y_1..y_n;  target ring: V_1..V_n, A */
    const int src = 2 * n, tgt = n + 1;
    std::vector<int> vvars(n);
    for (int i = 0; i < n; ++i)
        vvars[i] = i;
    MultiPoly A = MultiPoly::var(tgt, n);

    std::vector<MultiPoly> images;
    for (int k = 0; k < n; ++k) {
        MultiPoly img = elementary_symmetric(tgt, vvars, n - 1 - k) * A;
        if (k % 2)
            img = MultiPoly(tgt) - img;
        images.push_back(img);  // u_k
    }
    for (int i = 0; i < n; ++i)
        images.push_back(MultiPoly::var(tgt, i));  // y_{i+1}

    for (int i = 0; i < n; ++i) {
        MultiPoly x(src);
        for (int k = 0; k < n; ++k)
            x = x + MultiPoly::var(src, k) * MultiPoly::var(src, n + i).pow(k);
        std::vector<int> others;
        for (int j = 0; j < n; ++j)
            if (j != i)
                others.push_back(j);
        MultiPoly want = elementary_symmetric(tgt, others, n - 1) * A;
        if (!(x.substitute(images) == want))
            return false;
    }
    return true;
}

bool telescope_check(int n, int i)
{
    if (n < 1 || i < 1 || i > n)
        throw std::invalid_argument("need 1 <= i <= n");
    std::vector<int> all(n), others;
    for (int j = 0; j < n; ++j) {
        all[j] = j;
        if (j != i - 1)
            others.push_back(j);
    }
    MultiPoly vi = MultiPoly::var(n, i - 1);
    for (int m = 0; m <= n; ++m) {
        MultiPoly lhs = elementary_symmetric(n, all, m);
        MultiPoly rhs =
            elementary_symmetric(n, others, m) + vi * elementary_symmetric(n, others, m - 1);
        if (!(lhs == rhs))
            return false;
    }
    MultiPoly tele(n);
    for (int k = 0; k < n; ++k) {
        MultiPoly term = elementary_symmetric(n, all, n - 1 - k) * vi.pow(k);
        tele = (k % 2) ? tele - term : tele + term;
    }
    return tele == elementary_symmetric(n, others, n - 1);
}

}  // namespace cf
