#include "hydro/exact/poly_matrix.hpp"

#include "hydro/errors.hpp"

#include <bit>
#include <cstdint>

namespace hydro {

PolyMatrix zero_poly_matrix(std::size_t rows, std::size_t cols, int nvars) {
    return PolyMatrix(rows, cols, MultiPoly(nvars));
}

namespace {

int nvars_of(const PolyMatrix& m) { return m.rows() ? m(0, 0).nvars() : 0; }

// Minors of the rows listed in `rows`, indexed by the column subset (bitmask)
// of the same size. Only full-size subsets of the final layer are kept.
std::vector<MultiPoly> minor_table(const PolyMatrix& m, const std::vector<std::size_t>& rows) {
    const std::size_t n = m.cols();
    const int nv = nvars_of(m);
    const std::uint32_t full = (1u << n) - 1;
    std::vector<MultiPoly> cur(std::size_t(1) << n, MultiPoly(nv));
    cur[0] = MultiPoly(nv, Rational(1));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::vector<MultiPoly> next(std::size_t(1) << n, MultiPoly(nv));
        for (std::uint32_t s = 1; s <= full; ++s) {
            if (std::popcount(s) != static_cast<int>(k + 1))
                continue;
            MultiPoly acc(nv);
            for (std::size_t c = 0; c < n; ++c) {
                if (!(s & (1u << c)))
                    continue;
                const MultiPoly& a = m(rows[k], c);
                std::uint32_t rest = s & ~(1u << c);
                if (a.is_zero() || cur[rest].is_zero())
                    continue;
                int above = std::popcount(s >> (c + 1));
                MultiPoly t = a * cur[rest];
                if (above % 2)
                    acc -= t;
                else
                    acc += t;
            }
            next[s] = std::move(acc);
        }
        cur = std::move(next);
    }
    return cur;
}

} // namespace

MultiPoly poly_determinant(const PolyMatrix& m) {
    if (!m.square())
        throw DimensionMismatch("determinant of " + m.shape() + " matrix");
    if (m.rows() == 0)
        return MultiPoly(0, Rational(1));
    if (m.rows() > 20)
        throw OutOfRange("determinant size too large");
    std::vector<std::size_t> rows(m.rows());
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i] = i;
    auto t = minor_table(m, rows);
    return t[(std::size_t(1) << m.cols()) - 1];
}

PolyMatrix poly_adjugate(const PolyMatrix& m) {
    if (!m.square())
        throw DimensionMismatch("adjugate of " + m.shape() + " matrix");
    const std::size_t n = m.rows();
    const int nv = nvars_of(m);
    PolyMatrix adj = zero_poly_matrix(n, n, nv);
    if (n == 1) {
        adj(0, 0) = MultiPoly(nv, Rational(1));
        return adj;
    }
    const std::uint32_t full = (1u << n) - 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r < n; ++r)
            if (r != i)
                rows.push_back(r);
        auto t = minor_table(m, rows);
        for (std::size_t j = 0; j < n; ++j) {
            MultiPoly minor = t[full & ~(1u << j)];
            adj(j, i) = (i + j) % 2 ? -minor : minor;
        }
    }
    return adj;
}

Matrix<RationalFunction> matrix_inverse(const PolyMatrix& m) {
    MultiPoly det = poly_determinant(m);
    if (det.is_zero())
        throw IdenticallySingular("matrix is singular for all values of the variables");
    PolyMatrix adj = poly_adjugate(m);
    return adj.map([&](const MultiPoly& a) { return RationalFunction(a, det); });
}

PolyMatrix to_poly_matrix(const RationalMatrix& m, int nvars) {
    return m.map([&](const Rational& r) { return MultiPoly(nvars, r); });
}

RationalMatrix eval_matrix(const PolyMatrix& m, std::span<const Rational> point) {
    return m.map([&](const MultiPoly& p) { return p.eval(point); });
}

} // namespace hydro
