#pragma once

#include <cstddef>
#include <vector>

#include "dickson/rational.hpp"

namespace dickson {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Basis of the right null space of an m x n rational matrix, computed by
/// exact Gauss-Jordan elimination. Each basis vector has one free variable
/// set to 1, so the vectors are nonzero and linearly independent by
/// construction. Returns an empty list when the kernel is trivial.
inline std::vector<std::vector<Rational>> null_space(RatMatrix m, std::size_t ncols) {
    const std::size_t nrows = m.size();
    for (auto& row : m) row.resize(ncols, Rational(0));

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t sel = rank;
        while (sel < nrows && m[sel][col].is_zero()) ++sel;
        if (sel == nrows) continue;
        std::swap(m[sel], m[rank]);

        const Rational inv = Rational(1) / m[rank][col];
        for (std::size_t j = col; j < ncols; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < rank; ++r)
            v[pivot_col[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace dickson
