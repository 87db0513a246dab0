#include "cablefloer/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cf {

TriGrading TriGrading::operator+(const TriGrading& o) const
{
    if (alex2.size() != o.alex2.size())
        throw std::invalid_argument("grading length mismatch");
    TriGrading r = *this;
    for (std::size_t i = 0; i < alex2.size(); ++i)
        r.alex2[i] += o.alex2[i];
    r.maslov += o.maslov;
    r.twist += o.twist;
    return r;
}

static void check_elt(const TowerBasisElt& x)
{
    if (x.n < 1 || x.m < 0 || x.k < 0 || static_cast<int>(x.s2.size()) != x.n)
        throw std::invalid_argument("malformed tower basis element");
}

TowerBasisElt alg_unit(int n)
{
    if (n < 1)
        throw std::invalid_argument("n >= 1 required");
    return TowerBasisElt{n, 0, std::vector<int>(n, 0), 0};
}

TowerBasisElt gen_a(int n, int j)
{
    if (n < 1 || j < 0 || j > n - 1)
        throw std::invalid_argument("gen_a requires 0 <= j <= n-1");
    return TowerBasisElt{n, 1, std::vector<int>(n, n - 1 - 2 * j), 0};
}

TriGrading tower_grading(const TowerBasisElt& x)
{
    check_elt(x);
    return TriGrading{x.s2, -2 * h_torus(x.n, x.m, x.s2) - 2 * x.k, x.m};
}

TriGrading colored_grading(const HKnot& hk, const ColoredBasisElt& x)
{
    std::vector<int> a2(x.sbar.size());
    for (std::size_t i = 0; i < x.sbar.size(); ++i)
        a2[i] = 2 * x.sbar[i];
    return TriGrading{a2, -2 * h_colored(hk, x.sbar) - 2 * x.k, 0};
}

TowerBasisElt mul(const TowerBasisElt& x, const TowerBasisElt& y)
{
    check_elt(x);
    check_elt(y);
    if (x.n != y.n)
        throw std::invalid_argument("mul: strand counts differ");
    TowerBasisElt r{x.n, x.m + y.m, std::vector<int>(x.n), 0};
    for (int i = 0; i < x.n; ++i)
        r.s2[i] = x.s2[i] + y.s2[i];
    int drop = h_torus(x.n, x.m, x.s2) + h_torus(y.n, y.m, y.s2) - h_torus(r.n, r.m, r.s2);
    if (drop < 0)
        throw std::logic_error("mul: negative depth shift (h superadditivity violated)");
    r.k = x.k + y.k + drop;
    return r;
}

TowerBasisElt act_u(const TowerBasisElt& x, int i)
{
    check_elt(x);
    if (i < 1 || i > x.n)
        throw std::invalid_argument("strand index out of range");
    TowerBasisElt r = x;
    int h0 = h_torus(x.n, x.m, x.s2);
    r.s2[i - 1] -= 2;
    int h1 = h_torus(r.n, r.m, r.s2);
    r.k = x.k + 1 - (h1 - h0);
    if (r.k < 0)
        throw std::logic_error("act_u drove depth negative");
    return r;
}

TowerBasisElt act_v(const TowerBasisElt& x, int i)
{
    check_elt(x);
    if (i < 1 || i > x.n)
        throw std::invalid_argument("strand index out of range");
    TowerBasisElt r = x;
    int h0 = h_torus(x.n, x.m, x.s2);
    r.s2[i - 1] += 2;
    int h1 = h_torus(r.n, r.m, r.s2);
    r.k = x.k + (h0 - h1);
    if (r.k < 0)
        throw std::logic_error("act_v drove depth negative");
    return r;
}

TowerBasisElt act_uu(const TowerBasisElt& x)
{
    check_elt(x);
    TowerBasisElt r = x;
    ++r.k;
    return r;
}

bool verify_linear(int n, const std::vector<int>& I)
{
    const int k = static_cast<int>(I.size());
    if (k < 1 || k > n - 1)
        throw std::invalid_argument("verify_linear requires 1 <= |I| <= n-1");
    std::vector<bool> in(n + 1, false);
    for (int i : I) {
        if (i < 1 || i > n || in[i])
            throw std::invalid_argument("bad index set");
        in[i] = true;
    }
    TowerBasisElt lhs = gen_a(n, k - 1);
    TowerBasisElt rhs = gen_a(n, k);
    for (int i = 1; i <= n; ++i) {
        if (in[i])
            lhs = act_u(lhs, i);
        else
            rhs = act_v(rhs, i);
    }
    return lhs == rhs;
}

bool verify_linear_all(int n)
{
    for (int k = 1; k <= n - 1; ++k) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != k)
                continue;
            std::vector<int> I;
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i))
                    I.push_back(i + 1);
            if (!verify_linear(n, I))
                return false;
        }
    }
    return true;
}

bool verify_quadratic(int n, int i, int j, int k, int l)
{
    if (i + j != k + l || !(i <= k && k <= l && l <= j))
        throw std::invalid_argument("verify_quadratic requires i+j == k+l, i <= k <= l <= j");
    TowerBasisElt lhs = mul(gen_a(n, i), gen_a(n, j));
    TowerBasisElt rhs = mul(gen_a(n, k), gen_a(n, l));
    rhs.k += k * l - i * j;
    return lhs == rhs;
}

bool verify_quadratic_all(int n)
{
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            for (int k = i; k < n; ++k) {
                int l = i + j - k;
                if (k > l || l > j)
                    continue;
                if (!verify_quadratic(n, i, j, k, l))
                    return false;
            }
    return true;
}

bool verify_tower_gradings(int n, int max_m)
{
    for (int m = 0; m <= max_m; ++m) {
        for (int i = 0; i <= m * (n - 1); ++i) {
            const int q = m ? i / m : 0, r = m ? i % m : 0;
            TowerBasisElt x = alg_unit(n);
            for (int t = 0; t < m - r; ++t)
                x = mul(x, gen_a(n, q));
            for (int t = 0; t < r; ++t)
                x = mul(x, gen_a(n, q + 1));
            TriGrading want{std::vector<int>(n, m * (n - 1) - 2 * i), -(q + 1) * (q * m + 2 * r),
                            m};
            if (x.k != 0 || !(tower_grading(x) == want))
                return false;
        }
    }
    return true;
}

TowerBasisElt word_to_basis(int n, const std::vector<Letter>& word)
{
    TowerBasisElt acc = alg_unit(n);
    for (const Letter& l : word) {
        switch (l.kind) {
            case Letter::GenA: acc = mul(acc, gen_a(n, l.index)); break;
            case Letter::OpU: acc = act_u(acc, l.index); break;
            case Letter::OpV: acc = act_v(acc, l.index); break;
            case Letter::OpUU: acc = act_uu(acc); break;
            case Letter::OpA:
                throw std::invalid_argument("letter A acts only on the colored side");
        }
    }
    return acc;
}

std::vector<Letter> parse_word(const std::string& text, int n)
{
    std::vector<Letter> out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        Letter l{};
        if (tok == "U") {
            l.kind = Letter::OpUU;
        } else if (tok == "A") {
            l.kind = Letter::OpA;
        } else if (tok.size() >= 2 && (tok[0] == 'a' || tok[0] == 'U' || tok[0] == 'V')) {
            int idx;
            try {
                idx = std::stoi(tok.substr(1));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad word letter: " + tok);
            }
            if (tok[0] == 'a') {
                l.kind = Letter::GenA;
                l.index = idx;
            } else {
                l.kind = tok[0] == 'U' ? Letter::OpU : Letter::OpV;
                l.index = idx;
                if (idx < 1 || idx > n)
                    throw std::invalid_argument("strand index out of range in: " + tok);
            }
        } else {
            throw std::invalid_argument("bad word letter: " + tok);
        }
        out.push_back(l);
    }
    return out;
}

ColoredBasisElt colored_act(const HKnot& hk, const Letter& op, const ColoredBasisElt& x)
{
    ColoredBasisElt r = x;
    int h0 = h_colored(hk, x.sbar);
    switch (op.kind) {
        case Letter::OpV: {
            if (op.index < 1 || op.index > static_cast<int>(x.sbar.size()))
                throw std::invalid_argument("strand index out of range");
            r.sbar[op.index - 1] += 1;
            r.k = x.k + (h0 - h_colored(hk, r.sbar));
            break;
        }
        case Letter::OpU: {
            if (op.index < 1 || op.index > static_cast<int>(x.sbar.size()))
                throw std::invalid_argument("strand index out of range");
            r.sbar[op.index - 1] -= 1;
            r.k = x.k + 1 - (h_colored(hk, r.sbar) - h0);
            break;
        }
        case Letter::OpA: {
            for (int& v : r.sbar)
                v -= 1;
            r.k = x.k + 1 - (h_colored(hk, r.sbar) - h0);
            break;
        }
        case Letter::OpUU: r.k = x.k + 1; break;
        case Letter::GenA:
            throw std::invalid_argument("generator letters do not act on the colored side");
    }
    if (r.k < 0)
        throw std::logic_error("colored action drove depth negative");
    return r;
}

LocalizeResult localize(const TowerBasisElt& x, const HKnot& hk)
{
    check_elt(x);
    ColoredBasisElt c;
    c.sbar.resize(x.n);
    const int c2 = x.m * (x.n - 1);
    for (int i = 0; i < x.n; ++i) {
        if ((x.s2[i] - c2) % 2 != 0)
            throw std::invalid_argument("element off the cable lattice");
        c.sbar[i] = (x.s2[i] - c2) / 2;
    }
    int drop = h_stab(hk, x.n, x.m, c.sbar) - h_colored(hk, c.sbar);
    if (drop < 0)
        throw std::logic_error("localize: negative depth shift");
    c.k = x.k + drop;
    int mn = *std::min_element(c.sbar.begin(), c.sbar.end());
    /* Verified once the twist clears the L-space threshold and the degree sits
     * in the stable range; the unknot's localization is exact everywhere. */
    bool ok = hk.genus() == 0 ||
              (x.m >= lspace_threshold(hk) && mn >= hk.genus() - x.m);
    return LocalizeResult{c, ok};
}

int colored_dim(const HKnot& hk, int n, const std::vector<int>& sbar, int d)
{
    if (static_cast<int>(sbar.size()) != n)
        throw std::invalid_argument("multi-degree has wrong length");
    int top = -2 * h_colored(hk, sbar);
    return (d <= top && (top - d) % 2 == 0) ? 1 : 0;
}

}  // namespace cf
