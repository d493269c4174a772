#pragma once

#include <cstddef>
#include <vector>

#include "gcal/scalar.hpp"

namespace gcal::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of {x : A x = 0} over Q via reduced row echelon form.
inline std::vector<std::vector<Rational>> nullspace(RationalMatrix a, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[row], a[pivot]);
        const Rational inv = 1 / a[row][col];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t c = 0; c < cols; ++c) a[r][c] -= factor * a[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gcal::detail
