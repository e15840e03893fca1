#include "hydro/tensor/geometry.hpp"

#include "hydro/errors.hpp"
#include "hydro/exact/linalg.hpp"
#include "kernels.hpp"

namespace hydro {

namespace {

using detail::SymbolicEngine;

std::size_t z(int i) { return static_cast<std::size_t>(i); }

RationalFunction rf_zero(int nvars) { return RationalFunction(nvars); }

RationalMatrix constant_inverse(const Bivector& g) {
    if (!g.is_constant())
        throw FirstMetricNotConstant("first metric must be constant in the coordinates");
    RationalMatrix m(z(g.n()), z(g.n()), Rational(0));
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) {
            const MultiPoly& p = g(i, j);
            if (!p.is_constant())
                throw FirstMetricNotConstant("first metric depends on parameters; substitute them first");
            m(z(i), z(j)) = p.constant_term();
        }
    if (determinant(m).is_zero())
        throw IdenticallySingular("constant metric is degenerate");
    return inverse(m);
}

Tensor<RationalFunction> to_rf(const Tensor<detail::Frac>& t, int nvars) {
    Tensor<RationalFunction> out(t.n(), t.rank(), rf_zero(nvars));
    for (std::size_t k = 0; k < t.size(); ++k)
        out.flat(k) = t.flat(k).to_rational_function();
    return out;
}

} // namespace

Connection levi_civita(const Bivector& g) {
    const int n = g.n();
    const int nv = g.ring().nvars();
    auto cov = matrix_inverse(g.matrix());
    std::vector<Matrix<RationalFunction>> dcov;
    for (int k = 0; k < n; ++k)
        dcov.push_back(cov.map([&](const RationalFunction& f) { return f.diff(k); }));
    Connection c;
    c.n = n;
    c.gamma = Tensor<RationalFunction>(n, 3, rf_zero(nv));
    c.b = Tensor<RationalFunction>(n, 3, rf_zero(nv));
    const RationalFunction half(MultiPoly(nv, Rational(1, 2)));
    // lowered symbols first, then raised with the polynomial g
    Tensor<RationalFunction> low(n, 3, rf_zero(nv));
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k) {
                RationalFunction v = dcov[z(j)](z(l), z(k)) + dcov[z(k)](z(l), z(j)) - dcov[z(l)](z(j), z(k));
                low(l, j, k) = v * half;
                low(l, k, j) = low(l, j, k);
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = j; k < n; ++k) {
                RationalFunction acc = rf_zero(nv);
                for (int l = 0; l < n; ++l)
                    if (!g(i, l).is_zero() && !low(l, j, k).is_zero())
                        acc += RationalFunction(g(i, l)) * low(l, j, k);
                c.gamma(i, j, k) = acc;
                c.gamma(i, k, j) = acc;
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                RationalFunction acc = rf_zero(nv);
                for (int s = 0; s < n; ++s)
                    if (!g(i, s).is_zero() && !c.gamma(j, s, k).is_zero())
                        acc -= RationalFunction(g(i, s)) * c.gamma(j, s, k);
                c.b(i, j, k) = acc;
            }
    return c;
}

Tensor<RationalFunction> contravariant_christoffel(const Bivector& g) {
    SymbolicEngine e(g.ring(), {g.matrix()});
    return to_rf(detail::christoffel_b(e, g.matrix(), e.inverse(0)), g.ring().nvars());
}

Tensor<RationalFunction> riemann_curvature(const Bivector& g) {
    const int n = g.n();
    const int nv = g.ring().nvars();
    Connection c = levi_civita(g);
    auto dG = detail::all_derivatives(c.gamma);
    Tensor<RationalFunction> R(n, 4, rf_zero(nv));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    RationalFunction acc = dG[z(k)](i, l, j) - dG[z(l)](i, k, j);
                    for (int m = 0; m < n; ++m) {
                        if (!c.gamma(i, k, m).is_zero() && !c.gamma(m, l, j).is_zero())
                            acc += c.gamma(i, k, m) * c.gamma(m, l, j);
                        if (!c.gamma(i, l, m).is_zero() && !c.gamma(m, k, j).is_zero())
                            acc -= c.gamma(i, l, m) * c.gamma(m, k, j);
                    }
                    R(i, j, k, l) = acc;
                }
    return R;
}

bool is_flat(const Bivector& g, const CheckOptions& opts) {
    if (g.is_constant()) {
        if (g.determinant().is_zero())
            throw IdenticallySingular("metric is degenerate");
        return true;
    }
    bool flat = true;
    bool sampled = opts.resolve(g.n()) == CheckMode::Sampled;
    detail::with_engines(g.ring(), {g.matrix()}, sampled, opts.seed, opts.samples, [&](const auto& e) {
        if (!flat)
            return;
        using S = typename std::decay_t<decltype(e)>::Scalar;
        Matrix<S> G = g.matrix().map([&](const MultiPoly& p) { return e.lift(p); });
        auto b = detail::christoffel_b(e, g.matrix(), e.inverse(0));
        auto r = detail::flatness_residual(G, b, e.zero());
        for (std::size_t k = 0; k < r.size(); ++k)
            if (!detail::vanishes(r.flat(k))) {
                flat = false;
                return;
            }
    });
    return flat;
}

PolyMatrix affinor(const Bivector& g, const Bivector& h) {
    if (!(g.ring() == h.ring()))
        throw DimensionMismatch("metrics on different rings");
    RationalMatrix cov = constant_inverse(g);
    return h.matrix() * to_poly_matrix(cov, g.ring().nvars());
}

Tensor<MultiPoly> nijenhuis_torsion(const PolyMatrix& L) {
    if (!L.square() || L.rows() == 0)
        throw DimensionMismatch("affinor must be square");
    const int n = static_cast<int>(L.rows());
    return detail::nijenhuis(L, n, MultiPoly(L(0, 0).nvars()));
}

Tensor<MultiPoly> killing_residual(const Bivector& g, const Bivector& h) {
    if (!(g.ring() == h.ring()))
        throw DimensionMismatch("metrics on different rings");
    const int n = g.n();
    std::vector<PolyMatrix> dg, dh;
    for (int s = 0; s < n; ++s) {
        dg.push_back(g.matrix().map([&](const MultiPoly& p) { return p.diff(s); }));
        dh.push_back(h.matrix().map([&](const MultiPoly& p) { return p.diff(s); }));
    }
    // A(a, b, c) = g^{as} d_s h^{bc} - h^{as} d_s g^{bc}
    Tensor<MultiPoly> A(n, 3, g.ring().zero());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = b; c < n; ++c) {
                MultiPoly acc = g.ring().zero();
                for (int s = 0; s < n; ++s) {
                    if (!g(a, s).is_zero() && !dh[z(s)](z(b), z(c)).is_zero())
                        acc += g(a, s) * dh[z(s)](z(b), z(c));
                    if (!h(a, s).is_zero() && !dg[z(s)](z(b), z(c)).is_zero())
                        acc -= h(a, s) * dg[z(s)](z(b), z(c));
                }
                A(a, c, b) = acc;
                A(a, b, c) = std::move(acc);
            }
    Tensor<MultiPoly> K(n, 3, g.ring().zero());
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j)
                K(i, k, j) = A(i, k, j) + A(k, i, j) + A(j, i, k);
    return K;
}

Tensor<MultiPoly> linearity_residual(const Bivector& g, const Bivector& h) {
    if (!g.is_constant())
        throw FirstMetricNotConstant("linearity is tested in the flat coordinates of a constant first metric");
    const int n = h.n();
    Tensor<MultiPoly> R(n, 4, h.ring().zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    R(i, j, k, l) = h(i, j).diff(k).diff(l);
    return R;
}

ObstructionTensor obstruction_tensor(const Bivector& g, const Bivector& h) {
    if (!(g.ring() == h.ring()))
        throw DimensionMismatch("metrics on different rings");
    const int n = g.n();
    const int nv = g.ring().nvars();
    Connection cg = levi_civita(g);
    Connection ch = levi_civita(h);
    ObstructionTensor o;
    o.n = n;
    o.T = Tensor<RationalFunction>(n, 3, rf_zero(nv));
    for (std::size_t k = 0; k < o.T.size(); ++k)
        o.T.flat(k) = ch.gamma.flat(k) - cg.gamma.flat(k);
    // T^{ijk} = g^{ir} h^{ks} T^j_{rs}
    o.raised = Tensor<RationalFunction>(n, 3, rf_zero(nv));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                RationalFunction acc = rf_zero(nv);
                for (int r = 0; r < n; ++r) {
                    if (g(i, r).is_zero())
                        continue;
                    for (int s = 0; s < n; ++s)
                        if (!h(k, s).is_zero() && !o.T(j, r, s).is_zero())
                            acc += RationalFunction(g(i, r) * h(k, s)) * o.T(j, r, s);
                }
                o.raised(i, j, k) = acc;
            }
    return o;
}

PolyMatrix lie_derivative_bivector(const PolyMatrix& h, const std::vector<MultiPoly>& X, int n) {
    if (!h.square() || h.rows() != z(n) || X.size() != z(n))
        throw DimensionMismatch("Lie derivative: bivector " + h.shape() + ", field of length " +
                                std::to_string(X.size()));
    const int nv = X.empty() ? 0 : X[0].nvars();
    PolyMatrix out = zero_poly_matrix(z(n), z(n), nv);
    std::vector<std::vector<MultiPoly>> dX(z(n)); // dX[s][i] = d_s X^i
    for (int s = 0; s < n; ++s)
        for (int i = 0; i < n; ++i)
            dX[z(s)].push_back(X[z(i)].diff(s));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            MultiPoly acc(nv);
            for (int s = 0; s < n; ++s) {
                if (!X[z(s)].is_zero())
                    acc += X[z(s)] * h(z(i), z(j)).diff(s);
                if (!h(z(s), z(j)).is_zero() && !dX[z(s)][z(i)].is_zero())
                    acc -= h(z(s), z(j)) * dX[z(s)][z(i)];
                if (!h(z(i), z(s)).is_zero() && !dX[z(s)][z(j)].is_zero())
                    acc -= h(z(i), z(s)) * dX[z(s)][z(j)];
            }
            out(z(i), z(j)) = std::move(acc);
        }
    return out;
}

Bivector lie_derivative_bivector(const Bivector& h, const std::vector<MultiPoly>& X) {
    return Bivector(h.ring(), lie_derivative_bivector(h.matrix(), X, h.n()));
}

std::vector<MultiPoly> exactness_field(const Bivector& g, const Bivector& h) {
    RationalMatrix cov = constant_inverse(g);
    Bivector g1 = h.homogeneous_part(1);
    const int n = g.n();
    std::vector<MultiPoly> X;
    for (int i = 0; i < n; ++i) {
        MultiPoly acc = g.ring().zero();
        for (int s = 0; s < n; ++s)
            for (int l = 0; l < n; ++l)
                if (!g1(i, s).is_zero() && !cov(z(s), z(l)).is_zero())
                    acc -= g1(i, s) * g.ring().u(l + 1) * cov(z(s), z(l));
        X.push_back(std::move(acc));
    }
    return X;
}

bool exactness_check(const Bivector& g, const Bivector& h) {
    auto X = exactness_field(g, h);
    Bivector g1 = h.homogeneous_part(1);
    return lie_derivative_bivector(g, X) == g1 && lie_derivative_bivector(g1, X).is_zero();
}

} // namespace hydro
