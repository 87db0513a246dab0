#pragma once

/* Laurent polynomials and one-sided power series in a single variable t, with
 * exponents on the half-integer lattice (stored doubled, so t^{3/2} has key 3).
 * This is the arithmetic layer for Euler characteristics of cabled knots:
 * chi of a knot is a polynomial part plus an infinite tail in t^{-1}, so the
 * series type carries an explicit floor below which coefficients are unknown.
 */

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace cf {

using coef_t = long long;

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& what, std::size_t p) : std::runtime_error(what), pos(p) {}
};

/* ---------------------------------- LaurentPoly ------------------------- */

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(coef_t c) { if (c) coef_[0] = c; }
    static LaurentPoly term(coef_t c, int exp2);

    bool is_zero() const { return coef_.empty(); }
    int min_exp2() const;  // throws on zero
    int max_exp2() const;
    coef_t at2(int exp2) const;  // coefficient of t^{exp2/2}
    const std::map<int, coef_t>& terms2() const { return coef_; }

    void set2(int exp2, coef_t c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return coef_ == o.coef_; }

    LaurentPoly shifted2(int exp2) const;  // multiply by t^{exp2/2}
    LaurentPoly pow(int e) const;          // e >= 0

    coef_t eval_at_one() const;
    bool symmetric() const;      // p(t) == p(t^{-1})
    bool integer_exps() const;   // all exponents on the integer lattice

    /* Exact division; throws std::domain_error if the remainder is nonzero. */
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    std::string print() const;

private:
    std::map<int, coef_t> coef_;  // doubled exponent -> nonzero coefficient
};

/* Grammar: term (('+'|'-') term)*, term = [coef]['t'['^'[-]p[/2]]].  Doubled
 * exponents must land on the half-integer lattice, so the only denominator
 * accepted is 2.  Errors carry the byte offset of the offending token. */
LaurentPoly parse_poly(const std::string& text);

/* ---------------------------------- TruncatedSeries --------------------- */

/* A series sum c_e t^{e/2} supported in (-inf, top] whose coefficients are
 * exact for exponents >= floor2/2 and unspecified below.  Multiplication
 * raises the floor by the partner's top exponent, which is exactly the range
 * where the product is still determined by the known coefficients. */
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(LaurentPoly p, int floor2);

    int floor2() const { return floor2_; }
    coef_t at2(int exp2) const;
    const std::map<int, coef_t>& terms2() const { return coef_; }
    bool is_zero_above_floor() const { return coef_.empty(); }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const LaurentPoly& p) const;
    TruncatedSeries shifted2(int exp2) const;

    /* Equality of all coefficients at exponents strictly above cut2/2; both
     * floors must lie at or below the cut. */
    static bool agree_above(const TruncatedSeries& a, const TruncatedSeries& b, int cut2);
    /* Largest exponent where they differ (doubled), or nullopt. */
    static bool first_diff_above(const TruncatedSeries& a, const TruncatedSeries& b, int cut2,
                                 int* where2);

    std::string print() const;  // "... + O(t^floor)" style tail marker omitted

private:
    std::map<int, coef_t> coef_;
    int floor2_ = 0;
    void trim();
};

/* ---------------------------------- Euler characteristics --------------- */

void validate_alexander(const LaurentPoly& delta);  // delta(1)=1, symmetric, integral exps

/* chi_K = delta / (1 - t^{-1}), i.e. coefficient at t^s is the sum of delta's
 * coefficients at exponents >= s.  Exact down to the requested floor. */
TruncatedSeries chi_series(const LaurentPoly& delta, int floor2);

/* chi of the (n,mn) torus link: (t^{m/2}-t^{-m/2})^{n-1} / (t^{1/2}-t^{-1/2});
 * a genuine Laurent polynomial for n >= 2.  For n = 1 the quotient convention
 * degenerates and the knot normalization (constant 1) is returned. */
LaurentPoly torus_chi(int n, int m);

/* chi of the (n,mn)-cable: t^{-1/2} chi_K(t) (t^{m/2}-t^{-m/2})^{n-1}.
 * For n = 1 returns chi_K itself (a 1-cable is the knot). */
TruncatedSeries cable_chi(const LaurentPoly& delta, int n, int m, int floor2);

/* Checks t^{-m(n-1)/2} chi_cable == t^{-1/2} chi_K modulo exponents <= -m.
 * Reports the top disagreeing doubled exponent when false. */
struct StableChiReport {
    bool ok;
    int first_diff2;  // valid when !ok
};
StableChiReport stable_chi_check(const LaurentPoly& delta, int n, int m);

/* Alexander polynomial of the (p,q) torus knot by exact division. */
LaurentPoly torus_knot_delta(int p, int q);

}  // namespace cf
