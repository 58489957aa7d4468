#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <dickson/linalg.hpp>

#include "support.hpp"

using dickson::null_space;
using dickson::Rational;
using dickson::RatMatrix;

namespace {

bool annihilates(const RatMatrix& m, const std::vector<Rational>& v) {
    for (const auto& row : m) {
        Rational dot(0);
        for (std::size_t j = 0; j < row.size() && j < v.size(); ++j) dot += row[j] * v[j];
        if (!dot.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("full-rank square matrix has trivial kernel") {
    RatMatrix m = {{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK(null_space(m, 2).empty());
}

TEST_CASE("identity kernel is trivial, zero matrix kernel is everything") {
    RatMatrix eye = {{Rational(1), Rational(0), Rational(0)},
                     {Rational(0), Rational(1), Rational(0)},
                     {Rational(0), Rational(0), Rational(1)}};
    CHECK(null_space(eye, 3).empty());

    RatMatrix zero = {{Rational(0), Rational(0), Rational(0)}};
    const auto basis = null_space(zero, 3);
    REQUIRE(basis.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(basis[i][j] == (i == j ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("known one-dimensional kernel") {
    // x + y + z = 0, x - y = 0  ->  kernel spanned by (1, 1, -2)
    RatMatrix m = {{Rational(1), Rational(1), Rational(1)},
                   {Rational(1), Rational(-1), Rational(0)}};
    const auto basis = null_space(m, 3);
    REQUIRE(basis.size() == 1);
    const auto& v = basis[0];
    CHECK(v[0] * Rational(-2) == v[2] * Rational(1));
    CHECK(v[0] == v[1]);
    CHECK(annihilates(m, v));
}

TEST_CASE("duplicate rows do not inflate the rank") {
    RatMatrix m = {{Rational(1), Rational(2), Rational(3)},
                   {Rational(2), Rational(4), Rational(6)},
                   {Rational(1, 2), Rational(1), Rational(3, 2)}};
    const auto basis = null_space(m, 3);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(annihilates(m, v));
}

TEST_CASE("rows shorter than ncols are zero padded") {
    RatMatrix m = {{Rational(1)}};  // one row: x = 0 in a 3-column system
    const auto basis = null_space(m, 3);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        CHECK(v[0].is_zero());
        CHECK(annihilates(m, v));
    }
}

TEST_CASE("random matrices: basis vectors are in the kernel and independent") {
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t nrows = 1 + testsupport::draw(rng, 5);
        const std::size_t ncols = 1 + testsupport::draw(rng, 6);
        RatMatrix m(nrows, std::vector<Rational>(ncols));
        for (auto& row : m)
            for (auto& cell : row) cell = testsupport::random_rational(rng, 5, 3);

        const auto basis = null_space(m, ncols);
        for (const auto& v : basis) {
            CHECK(v.size() == ncols);
            CHECK(annihilates(m, v));
        }
        // Each vector owns a distinct free column set to 1 while every other
        // basis vector is 0 there, so a nonzero combination cannot vanish.
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::size_t ones = 0;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                std::size_t own = ncols;  // column where basis[i] == 1, basis[j] == 0
                for (std::size_t c = 0; c < ncols; ++c)
                    if (basis[i][c].is_one() && (i == j || basis[j][c].is_zero())) own = c;
                if (own < ncols) ++ones;
            }
            CHECK(ones == basis.size());
        }
        // rank + nullity = ncols: re-run on the transpose to bound the rank.
        RatMatrix t(ncols, std::vector<Rational>(nrows));
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i][j];
        const auto left = null_space(t, nrows);
        const std::size_t rank_from_rows = nrows - left.size();
        const std::size_t rank_from_cols = ncols - basis.size();
        CHECK(rank_from_rows == rank_from_cols);
    }
}
