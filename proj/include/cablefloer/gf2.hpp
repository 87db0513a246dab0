#pragma once

/* GF(2) linear algebra: dense word-packed matrices for ranks and composites,
 * and a sparse eliminator (rows as sorted column-index vectors) for wide
 * slices.  Pivoting is by leading column index, so results are deterministic
 * for any row order fed in.
 */

#include <cstdint>
#include <vector>

namespace cf {

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols);
    static Gf2Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const;
    void set(int r, int c, bool v);

    Gf2Matrix operator*(const Gf2Matrix& o) const;  // this (r x k) * o (k x c)
    bool operator==(const Gf2Matrix& o) const = default;

    int rank() const;

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;  // row-major
};

/* Rank of a list of dense bit-rows over ncols columns (rows are mutated). */
int gf2_rank_dense(std::vector<std::vector<std::uint64_t>>& rows, int ncols);

/* Rank of rows given as strictly increasing column-index vectors. */
int gf2_rank_sparse(std::vector<std::vector<int>>& rows);

/* Symmetric difference of two sorted index vectors (GF(2) row addition). */
std::vector<int> gf2_add_sparse(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace cf
