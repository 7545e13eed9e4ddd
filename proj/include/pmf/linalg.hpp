#pragma once

#include <cstddef>
#include <vector>

namespace pmf {

// Dense reduced row echelon form over an exact field type F.
// F needs +,-,*,/, unary -, is_zero-compatible comparison with F(0).
template <class F>
std::vector<int> rref(std::vector<std::vector<F>>& a)
{
    std::vector<int> pivots;
    if (a.empty())
        return pivots;
    size_t rows = a.size(), cols = a[0].size(), r = 0;
    const F zero(0);
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == zero)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        F inv = F(1) / a[r][c];
        for (size_t j = c; j < cols; ++j)
            a[r][j] = a[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == zero)
                continue;
            F f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                if (!(a[r][j] == zero))
                    a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(int(c));
        ++r;
    }
    a.resize(r);
    return pivots;
}

template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> a, size_t cols)
{
    std::vector<int> piv = rref(a);
    std::vector<char> is_piv(cols, 0);
    for (int p : piv)
        is_piv[p] = 1;
    std::vector<std::vector<F>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f])
            continue;
        std::vector<F> v(cols, F(0));
        v[f] = F(1);
        for (size_t i = 0; i < piv.size(); ++i)
            v[piv[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
size_t rank(std::vector<std::vector<F>> a)
{
    return rref(a).size();
}

}  // namespace pmf
