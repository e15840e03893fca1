#include "hydro/pencil/killing.hpp"

#include "hydro/errors.hpp"
#include "hydro/exact/linalg.hpp"
#include "hydro/tensor/geometry.hpp"

namespace hydro {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

RationalMatrix numeric_constant(const Bivector& g) {
    const int n = g.n();
    RationalMatrix m(z(n), z(n), Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!g(i, j).is_constant())
                throw FirstMetricNotConstant("metric must have numeric constant entries");
            m(z(i), z(j)) = g(i, j).constant_term();
        }
    if (determinant(m).is_zero())
        throw IdenticallySingular("constant metric is degenerate");
    return m;
}

// pairs i <= j in row-major order
std::vector<std::pair<int, int>> upper_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            out.emplace_back(i, j);
    return out;
}

// monomial slots in graded-lex descending order: u1, ..., un, 1
MultiPoly slot_monomial(const Ring& ring, int slot) {
    return slot < ring.n ? ring.u(slot + 1) : ring.constant(Rational(1));
}

Bivector unit_bivector(const Ring& ring, int i, int j, const MultiPoly& m) {
    auto e = zero_poly_matrix(z(ring.n), z(ring.n), ring.nvars());
    e(z(i), z(j)) = m;
    e(z(j), z(i)) = m;
    return Bivector(ring, std::move(e));
}

} // namespace

std::vector<Rational> linear_coordinates(const Bivector& h) {
    const Ring& ring = h.ring();
    const int n = ring.n;
    auto pairs = upper_pairs(n);
    std::vector<Rational> x(pairs.size() * z(n + 1), Rational(0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const MultiPoly& e = h(pairs[p].first, pairs[p].second);
        for (const auto& t : e.terms()) {
            int slot = -1;
            if (t.m.deg == 0)
                slot = n;
            else if (t.m.deg == 1)
                for (int k = 0; k < n; ++k)
                    if (t.m.e[z(k)] == 1)
                        slot = k;
            if (slot < 0)
                throw Error("bivector is not of degree <= 1 with numeric coefficients");
            x[z(slot) * pairs.size() + p] = t.c;
        }
    }
    return x;
}

Bivector from_linear_coordinates(const Ring& ring, const std::vector<Rational>& x) {
    const int n = ring.n;
    auto pairs = upper_pairs(n);
    if (x.size() != pairs.size() * z(n + 1))
        throw DimensionMismatch("coordinate vector of length " + std::to_string(x.size()));
    auto m = zero_poly_matrix(z(n), z(n), ring.nvars());
    for (int slot = 0; slot <= n; ++slot)
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const Rational& c = x[z(slot) * pairs.size() + p];
            if (c.is_zero())
                continue;
            MultiPoly t = slot_monomial(ring, slot) * c;
            m(z(pairs[p].first), z(pairs[p].second)) += t;
            if (pairs[p].first != pairs[p].second)
                m(z(pairs[p].second), z(pairs[p].first)) += t;
        }
    return Bivector(ring, std::move(m));
}

KillingBasis killing_vector_basis(const Bivector& g) {
    const int n = g.n();
    const Ring& ring = g.ring();
    RationalMatrix G = numeric_constant(g);
    // unknown A(a, b) at column a*n + b; equation (A G + G A^T)^{ij} = 0 for i <= j
    auto pairs = upper_pairs(n);
    RationalMatrix sys(pairs.size(), z(n * n), Rational(0));
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        auto [i, j] = pairs[r];
        for (int s = 0; s < n; ++s) {
            sys(r, z(i * n + s)) += G(z(s), z(j));
            sys(r, z(j * n + s)) += G(z(i), z(s));
        }
    }
    KillingBasis out;
    out.n = n;
    for (const auto& v : nullspace(sys)) {
        VectorField X(z(n), ring.zero());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!v[z(a * n + b)].is_zero())
                    X[z(a)] += ring.u(b + 1) * v[z(a * n + b)];
        out.vectors.push_back(std::move(X));
    }
    for (int c = 0; c < n; ++c) {
        VectorField T(z(n), ring.zero());
        T[z(c)] = ring.constant(Rational(1));
        out.vectors.push_back(std::move(T));
    }
    return out;
}

std::vector<Bivector> killing_bivector_space(const Bivector& g) {
    numeric_constant(g);
    const Ring& ring = g.ring();
    const int n = ring.n;
    auto pairs = upper_pairs(n);
    const std::size_t unknowns = pairs.size() * z(n + 1);
    std::vector<std::vector<Rational>> columns;
    for (int slot = 0; slot <= n; ++slot)
        for (const auto& [i, j] : pairs) {
            auto K = killing_residual(g, unit_bivector(ring, i, j, slot_monomial(ring, slot)));
            std::vector<Rational> col;
            for (std::size_t k = 0; k < K.size(); ++k) {
                const MultiPoly& e = K.flat(k);
                if (!e.is_constant())
                    throw Error("internal: Killing residual of a linear bivector is not constant");
                col.push_back(e.constant_term());
            }
            columns.push_back(std::move(col));
        }
    const std::size_t rows = columns.front().size();
    RationalMatrix sys(rows, unknowns, Rational(0));
    for (std::size_t c = 0; c < unknowns; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            sys(r, c) = columns[c][r];
    std::vector<Bivector> out;
    for (const auto& v : nullspace(sys))
        out.push_back(from_linear_coordinates(ring, v));
    return out;
}

std::vector<Bivector> killing_vector_products(const Bivector& g) {
    const Ring& ring = g.ring();
    const int n = ring.n;
    auto basis = killing_vector_basis(g).vectors;
    std::vector<Bivector> out;
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a; b < basis.size(); ++b) {
            auto m = zero_poly_matrix(z(n), z(n), ring.nvars());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    MultiPoly s = basis[a][z(i)] * basis[b][z(j)] + basis[a][z(j)] * basis[b][z(i)];
                    s *= Rational(1, 2);
                    m(z(i), z(j)) = s.homogeneous_part(n, 0) + s.homogeneous_part(n, 1);
                }
            Bivector p(ring, std::move(m));
            if (!p.is_zero())
                out.push_back(std::move(p));
        }
    return out;
}

} // namespace hydro
