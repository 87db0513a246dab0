#include "cablefloer/gf2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace cf {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(std::size_t(rows) * words_, 0)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

Gf2Matrix Gf2Matrix::identity(int n)
{
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

bool Gf2Matrix::get(int r, int c) const
{
    return (bits_[std::size_t(r) * words_ + c / 64] >> (c % 64)) & 1u;
}

void Gf2Matrix::set(int r, int c, bool v)
{
    std::uint64_t& w = bits_[std::size_t(r) * words_ + c / 64];
    std::uint64_t mask = std::uint64_t(1) << (c % 64);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch");
    Gf2Matrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k)
            if (get(i, k))
                for (int w = 0; w < o.words_; ++w)
                    out.bits_[std::size_t(i) * out.words_ + w] ^=
                        o.bits_[std::size_t(k) * o.words_ + w];
    return out;
}

int Gf2Matrix::rank() const
{
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i)
        rows.emplace_back(bits_.begin() + std::size_t(i) * words_,
                          bits_.begin() + std::size_t(i + 1) * words_);
    return gf2_rank_dense(rows, cols_);
}

static int leading_bit(const std::vector<std::uint64_t>& row)
{
    for (std::size_t w = 0; w < row.size(); ++w)
        if (row[w])
            return int(w) * 64 + std::countr_zero(row[w]);
    return -1;
}

int gf2_rank_dense(std::vector<std::vector<std::uint64_t>>& rows, int ncols)
{
    const int words = (ncols + 63) / 64;
    std::vector<const std::vector<std::uint64_t>*> pivot(ncols, nullptr);
    int rank = 0;
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != words)
            throw std::invalid_argument("row width mismatch");
        int lead;
        while ((lead = leading_bit(row)) >= 0 && pivot[lead]) {
            const auto& p = *pivot[lead];
            for (int w = 0; w < words; ++w)
                row[w] ^= p[w];
        }
        if (lead >= 0) {
            pivot[lead] = &row;
            ++rank;
        }
    }
    return rank;
}

std::vector<int> gf2_add_sparse(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int gf2_rank_sparse(std::vector<std::vector<int>>& rows)
{
    std::map<int, std::vector<int>> pivot;  // leading index -> reduced row
    int rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            auto it = pivot.find(row.front());
            if (it == pivot.end())
                break;
            row = gf2_add_sparse(row, it->second);
        }
        if (!row.empty()) {
            pivot.emplace(row.front(), row);
            ++rank;
        }
    }
    return rank;
}

}  // namespace cf
