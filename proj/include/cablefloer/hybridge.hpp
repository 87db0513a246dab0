#pragma once

/* Exact multivariate polynomials over the integers (signs matter here, unlike
 * the F2 modules elsewhere): enough ring machinery to state the substitution
 * that carries the deformed generators x_i = sum_k u_k y_i^k into the
 * colored-ring identity U_i = A * prod_{j != i} V_j, plus the elementary
 * symmetric telescope that proves it.
 */

#include <map>
#include <vector>

namespace cf {

class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, long long c);
    static MultiPoly var(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    bool operator==(const MultiPoly& o) const = default;

    MultiPoly pow(int e) const;

    /* Ring hom determined by variable images (all in a common target ring). */
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

private:
    int nvars_;
    std::map<std::vector<int>, long long> terms_;  // exponent vector -> coefficient
    void add_term(const std::vector<int>& e, long long c);
};

/* e_m of the listed variables inside an nvars-variable ring. */
MultiPoly elementary_symmetric(int nvars, const std::vector<int>& vars, int m);

/* Substitution u_k -> (-1)^k e_{n-1-k}(V) A, y_i -> V_i sends every
 * x_i = u_0 + u_1 y_i + ... + u_{n-1} y_i^{n-1} to A prod_{j != i} V_j. */
bool verify_hy(int n);

/* The two halves of the proof for strand i: the split
 * e_m = e^_m + V_i e^_{m-1} (hat = without V_i) for 0 <= m <= n, and the
 * alternating telescope sum_k (-1)^k e_{n-1-k} V_i^k = e^_{n-1}. */
bool telescope_check(int n, int i);

}  // namespace cf
