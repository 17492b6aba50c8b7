#include "linalg.hpp"

#include <utility>

namespace faulhaber::detail {

Rational determinant(Matrix a)
{
    const std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero())
            ++pivot;
        if (pivot == n)
            return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero())
                continue;
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

std::optional<LinearSolution> solve(Matrix a, std::vector<Rational> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Rational inv = Rational(1) / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero())
                continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero())
            return std::nullopt;

    LinearSolution sol;
    sol.particular.assign(cols, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        sol.particular[pivot_cols[i]] = b[i];
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (next < pivot_cols.size() && pivot_cols[next] == c)
            ++next;
        else
            sol.free_columns.push_back(c);
    }
    return sol;
}

} // namespace faulhaber::detail
