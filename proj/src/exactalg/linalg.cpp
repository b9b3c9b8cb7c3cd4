#include "fuchsian/exactalg/linalg.hpp"

namespace fuchsian {

std::vector<int> row_reduce(RationalMatrix& m, int ncols)
{
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][static_cast<std::size_t>(col)] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][static_cast<std::size_t>(col)];
        for (auto& x : m[row])
            x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row)
                continue;
            Rational f = m[r][static_cast<std::size_t>(col)];
            if (f == 0)
                continue;
            for (std::size_t c = static_cast<std::size_t>(col); c < m[r].size(); ++c)
                m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(RationalMatrix m, int ncols) { return static_cast<int>(row_reduce(m, ncols).size()); }

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, int ncols)
{
    auto pivots = row_reduce(m, ncols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int p : pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)])
            continue;
        std::vector<Rational> v(static_cast<std::size_t>(ncols));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free)];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve_linear(RationalMatrix m, const std::vector<Rational>& rhs,
                                                  int ncols)
{
    for (std::size_t r = 0; r < m.size(); ++r) {
        m[r].resize(static_cast<std::size_t>(ncols));
        m[r].push_back(rhs[r]);
    }
    auto pivots = row_reduce(m, ncols + 1);
    if (!pivots.empty() && pivots.back() == ncols)
        return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(ncols));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = m[r][static_cast<std::size_t>(ncols)];
    return x;
}

}  // namespace fuchsian
