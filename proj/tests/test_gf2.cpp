#include "doctest.h"

#include <random>

#include "cablefloer/gf2.hpp"

using namespace cf;

namespace {

Gf2Matrix random_matrix(std::mt19937& rng, int r, int c, double density = 0.4)
{
    Gf2Matrix m(r, c);
    std::bernoulli_distribution bit(density);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            if (bit(rng))
                m.set(i, j, true);
    return m;
}

Gf2Matrix transpose(const Gf2Matrix& m)
{
    Gf2Matrix t(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            t.set(j, i, m.get(i, j));
    return t;
}

}  // namespace

TEST_CASE("dense matrices: construction and identity")
{
    Gf2Matrix id = Gf2Matrix::identity(5);
    CHECK(id.rank() == 5);
    CHECK(id.get(2, 2));
    CHECK_FALSE(id.get(2, 3));

    Gf2Matrix z(3, 4);
    CHECK(z.rank() == 0);
    z.set(1, 3, true);
    CHECK(z.rank() == 1);
    z.set(1, 3, false);
    CHECK(z.rank() == 0);
}

TEST_CASE("rank: hand-checked examples")
{
    /* rows (1,1,0), (0,1,1), (1,0,1): third = first + second over GF(2) */
    Gf2Matrix m(3, 3);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    m.set(1, 2, true);
    m.set(2, 0, true);
    m.set(2, 2, true);
    CHECK(m.rank() == 2);

    /* wide matrix spanning everything */
    Gf2Matrix w(2, 70);
    w.set(0, 0, true);
    w.set(1, 69, true);
    CHECK(w.rank() == 2);
}

TEST_CASE("rank is invariant under transpose")
{
    std::mt19937 rng(23u);
    for (int trial = 0; trial < 50; ++trial) {
        Gf2Matrix m = random_matrix(rng, 1 + trial % 9, 1 + (trial * 7) % 13);
        CHECK(m.rank() == transpose(m).rank());
    }
}

TEST_CASE("product: identities and associativity")
{
    std::mt19937 rng(29u);
    Gf2Matrix a = random_matrix(rng, 6, 4), b = random_matrix(rng, 4, 5),
              c = random_matrix(rng, 5, 3);
    CHECK(Gf2Matrix::identity(6) * a == a);
    CHECK(a * Gf2Matrix::identity(4) == a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).rank() <= a.rank());
    CHECK((a * b).rank() <= b.rank());
}

TEST_CASE("sparse row addition is symmetric difference")
{
    CHECK(gf2_add_sparse({1, 3, 5}, {3, 4}) == std::vector<int>{1, 4, 5});
    CHECK(gf2_add_sparse({}, {2}) == std::vector<int>{2});
    CHECK(gf2_add_sparse({2, 7}, {2, 7}).empty());
}

TEST_CASE("sparse rank agrees with dense rank")
{
    std::mt19937 rng(31u);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + trial % 10, c = 1 + (trial * 5) % 17;
        Gf2Matrix m = random_matrix(rng, r, c, 0.3);
        std::vector<std::vector<int>> sparse_rows;
        for (int i = 0; i < r; ++i) {
            std::vector<int> row;
            for (int j = 0; j < c; ++j)
                if (m.get(i, j))
                    row.push_back(j);
            if (!row.empty())
                sparse_rows.push_back(row);
        }
        CHECK(gf2_rank_sparse(sparse_rows) == m.rank());
    }
}

TEST_CASE("dense word rank helper matches the matrix path")
{
    std::mt19937 rng(37u);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + trial % 8, c = 1 + (trial * 11) % 130;  // crosses word boundaries
        Gf2Matrix m = random_matrix(rng, r, c, 0.25);
        int words = (c + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(r, std::vector<std::uint64_t>(words, 0));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (m.get(i, j))
                    rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
        CHECK(gf2_rank_dense(rows, c) == m.rank());
    }
}
