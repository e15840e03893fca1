#pragma once

#include "hydro/exact/gaussian.hpp"
#include "hydro/exact/matrix.hpp"
#include "hydro/exact/rational.hpp"

#include <vector>

namespace hydro {

/// In-place reduced row echelon form over a field; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        F inv = F(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of {x : m x = 0}; one vector per free column, with a 1 in that column.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    auto piv = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv)
        is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<F> v(m.cols(), F{});
        v[free] = F(1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Stacks row vectors into a matrix.
template <class F>
Matrix<F> rows_to_matrix(const std::vector<std::vector<F>>& rows, std::size_t cols) {
    Matrix<F> m(rows.size(), cols, F{});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DimensionMismatch("row length " + std::to_string(rows[i].size()) +
                                    ", expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

/// True when the row spans of a and b coincide.
template <class F>
bool same_span(const std::vector<std::vector<F>>& a, const std::vector<std::vector<F>>& b,
               std::size_t cols) {
    auto ra = rank(rows_to_matrix(a, cols));
    auto rb = rank(rows_to_matrix(b, cols));
    auto all = a;
    all.insert(all.end(), b.begin(), b.end());
    return ra == rb && rank(rows_to_matrix(all, cols)) == ra;
}

template <class F>
F determinant(Matrix<F> m) {
    if (!m.square())
        throw DimensionMismatch("determinant of " + m.shape() + " matrix");
    F det(1);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::size_t p = c;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            return F{};
        if (p != c) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        F inv = F(1) / m(c, c);
        for (std::size_t i = c + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero())
                continue;
            F f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.square())
        throw DimensionMismatch("inverse of " + m.shape() + " matrix");
    std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n, F{});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1)
        throw ArithmeticError("singular matrix");
    Matrix<F> out(n, n, F{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = aug(i, n + j);
    return out;
}

template <class F>
Matrix<F> identity_matrix(std::size_t n) {
    Matrix<F> m(n, n, F{});
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = F(1);
    return m;
}

} // namespace hydro
