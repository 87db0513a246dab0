#include "cablefloer/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cablefloer/gf2.hpp"
#include "cablefloer/parallel.hpp"

namespace cf {

/* ------------------------------- Presentation --------------------------- */

void Presentation::term_degree(const PresTerm& t, std::vector<int>& alex2, int& maslov) const
{
    const PresGenerator& g = gens.at(t.gen);
    alex2 = g.alex2;
    int usum = 0;
    for (int i = 0; i < n; ++i) {
        alex2[i] += 2 * (t.v[i] - t.u[i] - t.a);
        usum += t.u[i];
    }
    maslov = g.maslov - 2 * usum - 2 * t.a;
}

void Presentation::add_relation(PresRelation r)
{
    if (r.terms.empty())
        throw std::invalid_argument("empty relation");
    std::vector<int> a2ref;
    int mref = 0;
    for (std::size_t t = 0; t < r.terms.size(); ++t) {
        const PresTerm& term = r.terms[t];
        if (term.gen < 0 || term.gen >= static_cast<int>(gens.size()))
            throw std::invalid_argument("relation references unknown generator");
        if (static_cast<int>(term.u.size()) != n || static_cast<int>(term.v.size()) != n)
            throw std::invalid_argument("exponent vector length mismatch");
        if (term.a < 0 || (!has_a && term.a != 0))
            throw std::invalid_argument("bad A exponent");
        for (int i = 0; i < n; ++i)
            if (term.u[i] < 0 || term.v[i] < 0 || (!has_u && term.u[i] != 0))
                throw std::invalid_argument("bad variable exponent");
        std::vector<int> a2;
        int mm;
        term_degree(term, a2, mm);
        if (t == 0) {
            a2ref = a2;
            mref = mm;
        } else if (a2 != a2ref || mm != mref) {
            throw std::invalid_argument("inhomogeneous relation");
        }
    }
    rels.push_back(std::move(r));
}

/* ------------------------------- builders ------------------------------- */

static std::vector<int> diag(int n, int val)
{
    return std::vector<int>(n, val);
}

static void add_equalizers(Presentation& p)
{
    for (int g = 0; g < static_cast<int>(p.gens.size()); ++g)
        for (int j = 0; j < p.n; ++j)
            for (int l = j + 1; l < p.n; ++l) {
                PresRelation r;
                PresTerm t1{diag(p.n, 0), diag(p.n, 0), 0, g};
                t1.u[j] = t1.v[j] = 1;
                PresTerm t2{diag(p.n, 0), diag(p.n, 0), 0, g};
                t2.u[l] = t2.v[l] = 1;
                r.terms = {t1, t2};
                p.add_relation(std::move(r));
            }
}

Presentation build_torus(int n, int m)
{
    if (n < 1 || m < 0)
        throw std::invalid_argument("build_torus requires n >= 1, m >= 0");
    Presentation p;
    p.n = n;
    const int c2 = m * (n - 1);
    const int top = m * (n - 1);
    for (int i = 0; i <= top; ++i) {
        int grw = 0;
        if (m > 0) {
            int q = i / m, r = i % m;
            grw = -(q + 1) * (q * m + 2 * r);
        }
        p.gens.push_back({diag(n, c2 - 2 * i), grw, "Y" + std::to_string(i)});
    }
    for (int i = 0; i < top; ++i) {
        const int q = i / m;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != q + 1)
                continue;
            PresRelation r;
            PresTerm lhs{diag(n, 0), diag(n, 0), 0, i};
            PresTerm rhs{diag(n, 0), diag(n, 0), 0, i + 1};
            for (int s = 0; s < n; ++s) {
                if (mask & (1u << s))
                    lhs.u[s] = 1;
                else
                    rhs.v[s] = 1;
            }
            r.terms = {lhs, rhs};
            p.add_relation(std::move(r));
        }
    }
    add_equalizers(p);
    return p;
}

Presentation build_knot(const Staircase& st, int trunc)
{
    if (trunc < 1)
        throw std::invalid_argument("truncation must be >= 1");
    Presentation p;
    p.n = 1;
    for (int i = 1; i <= trunc; ++i) {
        int s = staircase_sigma(st, i);
        p.gens.push_back({{2 * s}, -2 * (i - 1), "z" + std::to_string(s)});
    }
    for (int i = 1; i < trunc; ++i) {
        int gap = staircase_sigma(st, i) - staircase_sigma(st, i + 1);
        PresRelation r;
        r.terms = {PresTerm{{1}, {0}, 0, i - 1}, PresTerm{{0}, {gap - 1}, 0, i}};
        p.add_relation(std::move(r));
    }
    return p;
}

Presentation build_colored(const Staircase& st, int n, int trunc)
{
    if (n < 1 || trunc < 1)
        throw std::invalid_argument("build_colored requires n >= 1, trunc >= 1");
    Presentation p;
    p.n = n;
    for (int i = 1; i <= trunc; ++i) {
        int s = staircase_sigma(st, i);
        p.gens.push_back({diag(n, 2 * s), -2 * (i - 1), "zt" + std::to_string(s)});
    }
    for (int i = 1; i < trunc; ++i) {
        int gap = staircase_sigma(st, i) - staircase_sigma(st, i + 1);
        int onset = st.genus - staircase_sigma(st, i + 1);
        for (int j = 0; j < n; ++j) {
            PresRelation r;
            r.stable_m = onset;
            PresTerm lhs{diag(n, 0), diag(n, 0), 0, i - 1};
            lhs.u[j] = 1;
            PresTerm rhs{diag(n, 0), diag(n, gap), 0, i};
            rhs.v[j] = gap - 1;
            r.terms = {lhs, rhs};
            p.add_relation(std::move(r));
        }
    }
    add_equalizers(p);
    return p;
}

Presentation build_tensor(const Staircase& st, int n, int trunc)
{
    if (n < 1 || trunc < 1)
        throw std::invalid_argument("build_tensor requires n >= 1, trunc >= 1");
    Presentation p;
    p.n = n;
    p.has_u = false;
    p.has_a = true;
    for (int i = 1; i <= trunc; ++i) {
        int s = staircase_sigma(st, i);
        p.gens.push_back({diag(n, 2 * s), -2 * (i - 1), "zt" + std::to_string(s)});
    }
    for (int i = 1; i < trunc; ++i) {
        int gap = staircase_sigma(st, i) - staircase_sigma(st, i + 1);
        PresRelation r;
        r.stable_m = st.genus - staircase_sigma(st, i + 1);
        r.terms = {PresTerm{diag(n, 0), diag(n, 0), 1, i - 1},
                   PresTerm{diag(n, 0), diag(n, gap - 1), 0, i}};
        p.add_relation(std::move(r));
    }
    return p;
}

int default_trunc(const Staircase& st, int lo)
{
    return std::max(1, (lo < 0 ? -lo : 0) + st.genus + 2);
}

/* ------------------------------- graded_dim ----------------------------- */

namespace {

struct Monomial {
    std::vector<int> u;
    int a;
};

/* All (u, a) with sum(u)+a == total and u_i >= max(0, -(delta_i + a)); the
 * V-exponents v_i = delta_i + a + u_i are then automatically >= 0. */
void enum_monomials(const Presentation& p, const std::vector<int>& delta, int total,
                    std::vector<Monomial>& out)
{
    const int n = p.n;
    int alo = 0, ahi = 0;
    if (p.has_a) {
        ahi = total;
        if (!p.has_u)
            alo = total;  // no U's: the A exponent is forced
    }
    std::vector<int> u(n, 0);
    for (int a = alo; a <= ahi; ++a) {
        int rem = total - a;
        std::vector<int> lb(n);
        int lbsum = 0;
        for (int i = 0; i < n; ++i) {
            lb[i] = std::max(0, -(delta[i] + a));
            lbsum += lb[i];
        }
        if (lbsum > rem)
            continue;
        if (!p.has_u) {
            bool ok = true;
            for (int i = 0; i < n; ++i)
                if (lb[i] > 0)
                    ok = false;
            if (ok && rem == 0)
                out.push_back({std::vector<int>(n, 0), a});
            continue;
        }
        /* compositions of rem with lower bounds, lexicographic */
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == n - 1) {
                if (left >= lb[i]) {
                    u[i] = left;
                    out.push_back({u, a});
                }
                return;
            }
            int tail = 0;
            for (int t = i + 1; t < n; ++t)
                tail += lb[t];
            for (int x = lb[i]; x <= left - tail; ++x) {
                u[i] = x;
                rec(i + 1, left - x);
            }
        };
        rec(0, rem);
    }
}

struct ColKey {
    int gen;
    int a;
    std::vector<int> u;
    bool operator<(const ColKey& o) const
    {
        if (gen != o.gen)
            return gen < o.gen;
        if (a != o.a)
            return a < o.a;
        return u < o.u;
    }
};

/* Degree difference (slice - base) expressed as (delta, total); false if the
 * slice is unreachable from base by a monomial. */
bool degree_diff(const Presentation& p, const std::vector<int>& a2, int d,
                 const std::vector<int>& base2, int basem, std::vector<int>& delta, int& total)
{
    if ((basem - d) % 2 != 0 || basem < d)
        return false;
    total = (basem - d) / 2;
    delta.resize(p.n);
    for (int i = 0; i < p.n; ++i) {
        int diff = a2[i] - base2[i];
        if (diff % 2 != 0)
            return false;
        delta[i] = diff / 2;
    }
    return true;
}

}  // namespace

int graded_dim(const Presentation& p, const std::vector<int>& alex2, int d)
{
    if (static_cast<int>(alex2.size()) != p.n)
        throw std::invalid_argument("slice degree has wrong length");

    std::map<ColKey, int> colindex;
    int ncols = 0;
    std::vector<int> delta;
    int total;
    for (int g = 0; g < static_cast<int>(p.gens.size()); ++g) {
        if (!degree_diff(p, alex2, d, p.gens[g].alex2, p.gens[g].maslov, delta, total))
            continue;
        std::vector<Monomial> mons;
        enum_monomials(p, delta, total, mons);
        for (auto& mo : mons)
            colindex.emplace(ColKey{g, mo.a, mo.u}, ncols++);
    }
    if (ncols == 0)
        return 0;

    const bool dense = ncols <= 5000;
    std::vector<std::vector<std::uint64_t>> drows;
    std::vector<std::vector<int>> srows;
    const int words = (ncols + 63) / 64;

    std::vector<int> a2row;
    int mrow;
    for (const PresRelation& rel : p.rels) {
        p.term_degree(rel.terms[0], a2row, mrow);
        if (!degree_diff(p, alex2, d, a2row, mrow, delta, total))
            continue;
        std::vector<Monomial> mults;
        enum_monomials(p, delta, total, mults);
        for (auto& mu : mults) {
            std::vector<int> cols;
            cols.reserve(rel.terms.size());
            for (const PresTerm& t : rel.terms) {
                ColKey key{t.gen, mu.a + t.a, mu.u};
                for (int i = 0; i < p.n; ++i)
                    key.u[i] += t.u[i];
                auto it = colindex.find(key);
                if (it == colindex.end())
                    throw std::logic_error("relation term escaped the slice basis");
                cols.push_back(it->second);
            }
            std::sort(cols.begin(), cols.end());
            if (dense) {
                std::vector<std::uint64_t> row(words, 0);
                for (int c : cols)
                    row[c / 64] ^= std::uint64_t(1) << (c % 64);
                drows.push_back(std::move(row));
            } else {
                /* cancel duplicate columns mod 2 */
                std::vector<int> r;
                for (std::size_t i = 0; i < cols.size();) {
                    std::size_t j = i;
                    while (j < cols.size() && cols[j] == cols[i])
                        ++j;
                    if ((j - i) % 2)
                        r.push_back(cols[i]);
                    i = j;
                }
                srows.push_back(std::move(r));
            }
        }
    }
    int rank = dense ? gf2_rank_dense(drows, ncols) : gf2_rank_sparse(srows);
    return ncols - rank;
}

/* ------------------------------- scans ---------------------------------- */

std::vector<Slice> box_slices(int n, int lo2, int hi2, int dlo, int dhi)
{
    std::vector<Slice> out;
    if (hi2 < lo2 || dhi < dlo)
        return out;
    const int w = (hi2 - lo2) / 2 + 1;
    std::size_t npts = 1;
    for (int i = 0; i < n; ++i)
        npts *= w;
    for (std::size_t idx = 0; idx < npts; ++idx) {
        std::vector<int> a2(n);
        std::size_t rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            a2[i] = lo2 + 2 * static_cast<int>(rest % w);
            rest /= w;
        }
        for (int d = dlo; d <= dhi; ++d)
            out.push_back({a2, d});
    }
    return out;
}

std::vector<int> dim_scan_serial(const Presentation& p, const std::vector<Slice>& slices)
{
    std::vector<int> out(slices.size());
    for (std::size_t i = 0; i < slices.size(); ++i)
        out[i] = graded_dim(p, slices[i].alex2, slices[i].d);
    return out;
}

std::vector<int> dim_scan(const Presentation& p, const std::vector<Slice>& slices, int threads)
{
    std::vector<int> out(slices.size());
    parallel_for(slices.size(), threads,
                 [&](std::size_t i) { out[i] = graded_dim(p, slices[i].alex2, slices[i].d); });
    return out;
}

std::vector<Discrepancy> oracle_scan(const Presentation& p, const std::vector<Slice>& slices,
                                     const std::function<int(const Slice&)>& oracle, int threads)
{
    std::vector<int> got = dim_scan(p, slices, threads);
    std::vector<Discrepancy> out;
    for (std::size_t i = 0; i < slices.size(); ++i) {
        int want = oracle(slices[i]);
        if (got[i] != want)
            out.push_back({slices[i], got[i], want});
    }
    return out;
}

/* ------------------------------- rendering ------------------------------ */

namespace {

void render_power(std::ostringstream& os, const std::string& base, int e, bool& first)
{
    if (e == 0)
        return;
    if (!first)
        os << ' ';
    first = false;
    os << base;
    if (e > 1)
        os << '^' << e;
}

std::string render_term(const Presentation& p, const PresTerm& t)
{
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < p.n; ++i)
        render_power(os, p.n > 1 ? "U" + std::to_string(i + 1) : "U", t.u[i], first);
    if (p.n == 1) {
        render_power(os, "V", t.v[0], first);
    } else {
        int common = *std::min_element(t.v.begin(), t.v.end());
        for (int i = 0; i < p.n; ++i)
            render_power(os, "V" + std::to_string(i + 1), t.v[i] - common, first);
        if (common > 0) {
            std::ostringstream bundle;
            bundle << '(';
            for (int i = 0; i < p.n; ++i)
                bundle << (i ? " " : "") << 'V' << i + 1;
            bundle << ')';
            render_power(os, bundle.str(), common, first);
        }
    }
    render_power(os, "A", t.a, first);
    if (!first)
        os << ' ';
    os << p.gens.at(t.gen).label;
    return os.str();
}

}  // namespace

std::vector<std::string> relation_lines(const Presentation& p, bool annotate)
{
    std::vector<std::string> out;
    for (const PresRelation& r : p.rels) {
        std::ostringstream os;
        if (r.terms.size() == 2) {
            os << render_term(p, r.terms[0]) << " = " << render_term(p, r.terms[1]);
        } else {
            for (std::size_t i = 0; i < r.terms.size(); ++i)
                os << (i ? " + " : "") << render_term(p, r.terms[i]);
            os << " = 0";
        }
        if (annotate && r.stable_m > 0)
            os << "  [m >= " << r.stable_m << "]";
        out.push_back(os.str());
    }
    return out;
}

}  // namespace cf
