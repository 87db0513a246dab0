#include "cablefloer/laurent.hpp"

#include <numeric>
#include <sstream>

namespace cf {

/* ---------------------------------- LaurentPoly ------------------------- */

LaurentPoly LaurentPoly::term(coef_t c, int exp2)
{
    LaurentPoly p;
    if (c)
        p.coef_[exp2] = c;
    return p;
}

int LaurentPoly::min_exp2() const
{
    if (coef_.empty())
        throw std::logic_error("min_exp2 of zero polynomial");
    return coef_.begin()->first;
}

int LaurentPoly::max_exp2() const
{
    if (coef_.empty())
        throw std::logic_error("max_exp2 of zero polynomial");
    return coef_.rbegin()->first;
}

coef_t LaurentPoly::at2(int exp2) const
{
    auto it = coef_.find(exp2);
    return it == coef_.end() ? 0 : it->second;
}

void LaurentPoly::set2(int exp2, coef_t c)
{
    if (c)
        coef_[exp2] = c;
    else
        coef_.erase(exp2);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : o.coef_)
        r.set2(e, r.at2(e) + c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : o.coef_)
        r.set2(e, r.at2(e) - c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly r;
    for (auto& [e1, c1] : coef_)
        for (auto& [e2, c2] : o.coef_)
            r.set2(e1 + e2, r.at2(e1 + e2) + c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::shifted2(int exp2) const
{
    LaurentPoly r;
    for (auto& [e, c] : coef_)
        r.coef_[e + exp2] = c;
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const
{
    if (e < 0)
        throw std::invalid_argument("pow: negative exponent");
    LaurentPoly r(1);
    for (int i = 0; i < e; ++i)
        r = r * *this;
    return r;
}

coef_t LaurentPoly::eval_at_one() const
{
    coef_t s = 0;
    for (auto& [e, c] : coef_)
        s += c;
    return s;
}

bool LaurentPoly::symmetric() const
{
    for (auto& [e, c] : coef_)
        if (at2(-e) != c)
            return false;
    return true;
}

bool LaurentPoly::integer_exps() const
{
    for (auto& [e, c] : coef_) {
        (void)c;
        if (e % 2 != 0)
            return false;
    }
    return true;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const
{
    if (divisor.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (is_zero())
        return {};
    const int qmin2 = min_exp2() - divisor.min_exp2();
    LaurentPoly rem = *this, quot;
    while (!rem.is_zero()) {
        int qe = rem.max_exp2() - divisor.max_exp2();
        if (qe < qmin2)
            throw std::domain_error("inexact Laurent division");
        coef_t lead = rem.coef_.rbegin()->second;
        coef_t dlead = divisor.coef_.rbegin()->second;
        if (lead % dlead != 0)
            throw std::domain_error("inexact Laurent division (coefficient)");
        coef_t qc = lead / dlead;
        quot.set2(qe, quot.at2(qe) + qc);
        rem = rem - divisor.shifted2(qe) * LaurentPoly(qc);
    }
    return quot;
}

/* Exponent rendering shared by poly and series printers. */
static void print_monomial(std::ostringstream& os, coef_t mag, int exp2)
{
    if (exp2 == 0) {
        os << mag;
        return;
    }
    if (mag != 1)
        os << mag;
    os << 't';
    if (exp2 == 2)
        return;
    os << '^';
    if (exp2 % 2 == 0)
        os << exp2 / 2;
    else
        os << exp2 << "/2";
}

std::string LaurentPoly::print() const
{
    if (coef_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        coef_t c = it->second;
        if (first) {
            if (c < 0)
                os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        print_monomial(os, c < 0 ? -c : c, it->first);
    }
    return os.str();
}

/* --------------------------------- parse_poly --------------------------- */

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws()
    {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
            ++i;
    }
    bool done()
    {
        skip_ws();
        return i >= s.size();
    }
    char peek()
    {
        skip_ws();
        return s[i];
    }
};

coef_t parse_digits(Cursor& c)
{
    c.skip_ws();
    std::size_t start = c.i;
    coef_t v = 0;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
        v = v * 10 + (c.s[c.i] - '0');
        ++c.i;
    }
    if (c.i == start)
        throw ParseError("expected digits", start);
    return v;
}

}  // namespace

LaurentPoly parse_poly(const std::string& text)
{
    Cursor c{text};
    LaurentPoly out;
    bool any = false;
    while (!c.done()) {
        coef_t sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-')
                sign = -1;
            ++c.i;
            if (c.done())
                throw ParseError("dangling sign", c.i);
            ch = c.peek();
        } else if (any) {
            throw ParseError("expected '+' or '-' between terms", c.i);
        }
        coef_t mag = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            mag = parse_digits(c);
            have_coef = true;
        }
        int exp2 = 0;
        c.skip_ws();
        if (c.i < c.s.size() && c.s[c.i] == 't') {
            ++c.i;
            exp2 = 2;
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                int esign = 1;
                c.skip_ws();
                if (c.i < c.s.size() && c.s[c.i] == '-') {
                    esign = -1;
                    ++c.i;
                }
                std::size_t epos = c.i;
                coef_t p = parse_digits(c);
                if (c.i < c.s.size() && c.s[c.i] == '/') {
                    ++c.i;
                    if (c.i >= c.s.size() || c.s[c.i] != '2')
                        throw ParseError("exponent denominator must be 2", c.i);
                    ++c.i;
                    exp2 = esign * static_cast<int>(p);
                } else {
                    exp2 = esign * 2 * static_cast<int>(p);
                }
                (void)epos;
            }
        } else if (!have_coef) {
            throw ParseError("expected coefficient or 't'", c.i);
        }
        out.set2(exp2, out.at2(exp2) + sign * mag);
        any = true;
    }
    if (!any)
        throw ParseError("empty polynomial", 0);
    return out;
}

/* ---------------------------------- TruncatedSeries --------------------- */

TruncatedSeries::TruncatedSeries(LaurentPoly p, int floor2) : floor2_(floor2)
{
    for (auto& [e, c] : p.terms2())
        if (e >= floor2)
            coef_[e] = c;
}

void TruncatedSeries::trim()
{
    for (auto it = coef_.begin(); it != coef_.end();) {
        if (it->second == 0 || it->first < floor2_)
            it = coef_.erase(it);
        else
            ++it;
    }
}

coef_t TruncatedSeries::at2(int exp2) const
{
    if (exp2 < floor2_)
        throw std::logic_error("coefficient below series floor");
    auto it = coef_.find(exp2);
    return it == coef_.end() ? 0 : it->second;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const
{
    TruncatedSeries r;
    r.floor2_ = std::max(floor2_, o.floor2_);
    r.coef_ = coef_;
    for (auto& [e, c] : o.coef_)
        r.coef_[e] += c;
    r.trim();
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const LaurentPoly& p) const
{
    TruncatedSeries r;
    if (p.is_zero()) {
        r.floor2_ = floor2_;
        return r;
    }
    r.floor2_ = floor2_ + p.max_exp2();
    for (auto& [e1, c1] : coef_)
        for (auto& [e2, c2] : p.terms2())
            if (e1 + e2 >= r.floor2_)
                r.coef_[e1 + e2] += c1 * c2;
    r.trim();
    return r;
}

TruncatedSeries TruncatedSeries::shifted2(int exp2) const
{
    TruncatedSeries r;
    r.floor2_ = floor2_ + exp2;
    for (auto& [e, c] : coef_)
        r.coef_[e + exp2] = c;
    return r;
}

bool TruncatedSeries::agree_above(const TruncatedSeries& a, const TruncatedSeries& b, int cut2)
{
    int w;
    return !first_diff_above(a, b, cut2, &w);
}

bool TruncatedSeries::first_diff_above(const TruncatedSeries& a, const TruncatedSeries& b,
                                       int cut2, int* where2)
{
    if (a.floor2_ > cut2 || b.floor2_ > cut2)
        throw std::logic_error("series floor above comparison cut");
    auto ia = a.coef_.rbegin();
    auto ib = b.coef_.rbegin();
    while (true) {
        int ea = (ia != a.coef_.rend()) ? ia->first : cut2;
        int eb = (ib != b.coef_.rend()) ? ib->first : cut2;
        int e = std::max(ea, eb);
        if (e <= cut2)
            return false;
        coef_t ca = (ea == e) ? ia->second : 0;
        coef_t cb = (eb == e) ? ib->second : 0;
        if (ca != cb) {
            *where2 = e;
            return true;
        }
        if (ea == e)
            ++ia;
        if (eb == e)
            ++ib;
    }
}

std::string TruncatedSeries::print() const
{
    std::ostringstream os;
    bool first = true;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        if (first) {
            if (it->second < 0)
                os << '-';
            first = false;
        } else {
            os << (it->second < 0 ? " - " : " + ");
        }
        coef_t c = it->second;
        print_monomial(os, c < 0 ? -c : c, it->first);
    }
    if (!first)
        os << " + ";
    os << "O(t^";
    if (floor2_ % 2 == 0)
        os << floor2_ / 2;
    else
        os << floor2_ << "/2";
    os << ")";
    return os.str();
}

/* ---------------------------------- Euler characteristics --------------- */

void validate_alexander(const LaurentPoly& delta)
{
    if (!delta.integer_exps())
        throw std::invalid_argument("Alexander polynomial must have integer exponents");
    if (delta.eval_at_one() != 1)
        throw std::invalid_argument("Alexander polynomial must evaluate to 1 at t=1");
    if (!delta.symmetric())
        throw std::invalid_argument("Alexander polynomial must be symmetric");
}

TruncatedSeries chi_series(const LaurentPoly& delta, int floor2)
{
    validate_alexander(delta);
    TruncatedSeries out(LaurentPoly{}, floor2);
    LaurentPoly partial;  // running sum of delta coefficients from the top
    int top2 = delta.max_exp2();
    coef_t acc = 0;
    for (int e = top2; e >= floor2; e -= 2) {
        acc += delta.at2(e);
        partial.set2(e, acc);
    }
    return TruncatedSeries(partial, floor2);
}

LaurentPoly torus_chi(int n, int m)
{
    if (n < 1 || m < 0)
        throw std::invalid_argument("torus_chi requires n >= 1, m >= 0");
    if (n == 1)
        return LaurentPoly(1);  // knot normalization; the link quotient degenerates
    LaurentPoly binom = LaurentPoly::term(1, m) - LaurentPoly::term(1, -m);
    LaurentPoly num = binom.pow(n - 1);
    LaurentPoly den = LaurentPoly::term(1, 1) - LaurentPoly::term(1, -1);
    return num.divide_exact(den);
}

TruncatedSeries cable_chi(const LaurentPoly& delta, int n, int m, int floor2)
{
    if (n < 1 || m < 0)
        throw std::invalid_argument("cable_chi requires n >= 1, m >= 0");
    if (n == 1)
        return chi_series(delta, floor2);  // a 1-cable is the knot itself
    LaurentPoly factor = (LaurentPoly::term(1, m) - LaurentPoly::term(1, -m)).pow(n - 1);
    int ftop = factor.is_zero() ? 0 : factor.max_exp2();
    TruncatedSeries chi = chi_series(delta, floor2 + 1 - ftop);
    return (chi * factor).shifted2(-1);
}

StableChiReport stable_chi_check(const LaurentPoly& delta, int n, int m)
{
    if (n < 2 || m < 1)
        throw std::invalid_argument("stable_chi_check requires n >= 2, m >= 1");
    validate_alexander(delta);
    /* The normalized cable chi equals t^{-1/2} chi_K except for correction
     * terms t^{-km} * t^{-1/2} chi_K, k >= 1, whose exponents all lie at or
     * below g - m.  That region is the sharp one: the coefficient at
     * g - m - 1/2 genuinely differs. */
    const int cut2 = delta.max_exp2() - 2 * m;
    const int floor2 = cut2 - 8;
    TruncatedSeries lhs = cable_chi(delta, n, m, floor2 + m * (n - 1)).shifted2(-m * (n - 1));
    TruncatedSeries rhs = chi_series(delta, floor2 + 1).shifted2(-1);
    StableChiReport rep{true, 0};
    int w;
    if (TruncatedSeries::first_diff_above(lhs, rhs, cut2, &w)) {
        rep.ok = false;
        rep.first_diff2 = w;
    }
    return rep;
}

LaurentPoly torus_knot_delta(int p, int q)
{
    if (p < 1 || q < 1 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus_knot_delta requires coprime p,q >= 1");
    auto binom2 = [](int k) {  // t^{k/2} - t^{-k/2}
        return LaurentPoly::term(1, k) - LaurentPoly::term(1, -k);
    };
    LaurentPoly num = binom2(p * q) * binom2(1);
    LaurentPoly den = binom2(p) * binom2(q);
    return num.divide_exact(den);
}

}  // namespace cf
