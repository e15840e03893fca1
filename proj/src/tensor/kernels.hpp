#pragma once

// Tensor formulas shared by the polynomial, symbolic and sampled code paths.
// Scalars need +, -, *, diff(k) and a vanishes() overload; index conventions
// follow the public headers (b(i, j, k) = b^{ij}_k, L(i, j) = L^i_j).

#include "engine.hpp"
#include "hydro/tensor/tensor_array.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hydro::detail {

inline bool vanishes(const MultiPoly& p) { return p.is_zero(); }

template <class S>
S sum_product(const S& zero, std::size_t count, auto&& term) {
    S acc = zero;
    for (std::size_t k = 0; k < count; ++k)
        acc += term(k);
    return acc;
}

template <class S>
Tensor<S> diff_tensor(const Tensor<S>& t, int l) {
    Tensor<S> out = t;
    for (std::size_t k = 0; k < t.size(); ++k)
        out.flat(k) = t.flat(k).diff(l);
    return out;
}

template <class S>
std::vector<Tensor<S>> all_derivatives(const Tensor<S>& t) {
    std::vector<Tensor<S>> out;
    for (int l = 0; l < t.n(); ++l)
        out.push_back(diff_tensor(t, l));
    return out;
}

template <class S>
std::vector<Matrix<S>> matrix_derivatives(const Matrix<S>& m, int n) {
    std::vector<Matrix<S>> out;
    for (int l = 0; l < n; ++l)
        out.push_back(m.map([&](const S& x) { return x.diff(l); }));
    return out;
}

/// b^{ij}_k of G from its covariant inverse C.
template <class E>
Tensor<typename E::Scalar> christoffel_b(const E& e, const PolyMatrix& G, const Matrix<typename E::Scalar>& C) {
    using S = typename E::Scalar;
    const int n = e.ring().n;
    const auto un = static_cast<std::size_t>(n);
    std::vector<PolyMatrix> dG;
    for (int s = 0; s < n; ++s)
        dG.push_back(G.map([&](const MultiPoly& p) { return p.diff(s); }));
    Tensor<S> b(n, 3, e.zero());
    for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) {
            std::vector<S> A;
            for (std::size_t bb = 0; bb < un; ++bb) {
                MultiPoly a(e.ring().nvars());
                for (std::size_t s = 0; s < un; ++s) {
                    if (!G(i, s).is_zero() && !dG[s](j, bb).is_zero())
                        a += G(i, s) * dG[s](j, bb);
                    if (!G(j, s).is_zero() && !dG[s](i, bb).is_zero())
                        a -= G(j, s) * dG[s](i, bb);
                }
                A.push_back(e.lift(a));
            }
            for (std::size_t k = 0; k < un; ++k) {
                S acc = e.lift(dG[k](i, j));
                for (std::size_t bb = 0; bb < un; ++bb)
                    if (!A[bb].is_zero() && !C(bb, k).is_zero())
                        acc += A[bb] * C(bb, k);
                acc = acc * Rational(1, 2);
                acc.reduce();
                b(i, j, k) = std::move(acc);
            }
        }
    return b;
}

/// Contravariant curvature R(i, j, q, k); vanishes iff G is flat.
template <class S>
Tensor<S> flatness_residual(const Matrix<S>& G, const Tensor<S>& b, const S& zero) {
    const int n = b.n();
    auto db = all_derivatives(b);
    Tensor<S> r(n, 4, zero);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int q = 0; q < n; ++q)
                for (int k = 0; k < n; ++k) {
                    S acc = zero;
                    for (int l = 0; l < n; ++l) {
                        const S& g = G(static_cast<std::size_t>(l), static_cast<std::size_t>(q));
                        if (!g.is_zero())
                            acc += g * (db[static_cast<std::size_t>(l)](i, j, k) -
                                        db[static_cast<std::size_t>(k)](i, j, l));
                        if (!b(l, i, k).is_zero() && !b(q, j, l).is_zero())
                            acc += b(l, i, k) * b(q, j, l);
                        if (!b(q, i, l).is_zero() && !b(l, j, k).is_zero())
                            acc -= b(q, i, l) * b(l, j, k);
                    }
                    acc.reduce();
                    r(i, j, q, k) = std::move(acc);
                }
    return r;
}

/// T^{ijk} = h^{ks} b^{ij}_s - g^{ir} bh^{kj}_r.
template <class S>
Tensor<S> raised_obstruction(const Matrix<S>& G, const Tensor<S>& b, const Matrix<S>& H, const Tensor<S>& bh,
                             const S& zero) {
    const int n = b.n();
    Tensor<S> t(n, 3, zero);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                S acc = zero;
                for (int s = 0; s < n; ++s) {
                    const S& h = H(static_cast<std::size_t>(k), static_cast<std::size_t>(s));
                    if (!h.is_zero() && !b(i, j, s).is_zero())
                        acc += h * b(i, j, s);
                    const S& g = G(static_cast<std::size_t>(i), static_cast<std::size_t>(s));
                    if (!g.is_zero() && !bh(k, j, s).is_zero())
                        acc -= g * bh(k, j, s);
                }
                acc.reduce();
                t(i, j, k) = std::move(acc);
            }
    return t;
}

template <class S>
Tensor<S> t1_residual(const Tensor<S>& T, const S& zero) {
    const int n = T.n();
    Tensor<S> r(n, 3, zero);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                r(i, j, k) = T(i, j, k) - T(k, j, i);
    return r;
}

template <class S>
Tensor<S> t2_residual(const Tensor<S>& T, const S& zero) {
    const int n = T.n();
    Tensor<S> r(n, 3, zero);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                r(i, j, k) = T(i, j, k) + T(j, k, i) + T(k, i, j);
    return r;
}

/// T^{ijs} g_{sa} T^{arq} - T^{irs} g_{sa} T^{ajq}: the quadratic condition
/// with its free lower index raised by h.
template <class S>
Tensor<S> t3_residual(const Tensor<S>& T, const Matrix<S>& Cg, const S& zero) {
    const int n = T.n();
    Tensor<S> M(n, 3, zero);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a) {
                S acc = zero;
                for (int s = 0; s < n; ++s) {
                    const S& c = Cg(static_cast<std::size_t>(s), static_cast<std::size_t>(a));
                    if (!c.is_zero() && !T(i, j, s).is_zero())
                        acc += T(i, j, s) * c;
                }
                acc.reduce();
                M(i, j, a) = std::move(acc);
            }
    Tensor<S> r(n, 4, zero);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int rr = 0; rr < n; ++rr)
                for (int q = 0; q < n; ++q) {
                    S acc = zero;
                    for (int a = 0; a < n; ++a) {
                        if (!M(i, j, a).is_zero() && !T(a, rr, q).is_zero())
                            acc += M(i, j, a) * T(a, rr, q);
                        if (!M(i, rr, a).is_zero() && !T(a, j, q).is_zero())
                            acc -= M(i, rr, a) * T(a, j, q);
                    }
                    acc.reduce();
                    r(i, j, rr, q) = std::move(acc);
                }
    return r;
}

/// nabla^q T^{ijk} for the connection with symbols b of the metric G.
template <class S>
Tensor<S> covariant_derivative3(const Tensor<S>& T, const Matrix<S>& G, const Tensor<S>& b, const S& zero) {
    const int n = T.n();
    auto dT = all_derivatives(T);
    Tensor<S> r(n, 4, zero);
    for (int q = 0; q < n; ++q)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    S acc = zero;
                    for (int l = 0; l < n; ++l) {
                        const S& g = G(static_cast<std::size_t>(q), static_cast<std::size_t>(l));
                        if (!g.is_zero() && !dT[static_cast<std::size_t>(l)](i, j, k).is_zero())
                            acc += g * dT[static_cast<std::size_t>(l)](i, j, k);
                        if (!b(q, i, l).is_zero() && !T(l, j, k).is_zero())
                            acc -= b(q, i, l) * T(l, j, k);
                        if (!b(q, j, l).is_zero() && !T(i, l, k).is_zero())
                            acc -= b(q, j, l) * T(i, l, k);
                        if (!b(q, k, l).is_zero() && !T(i, j, l).is_zero())
                            acc -= b(q, k, l) * T(i, j, l);
                    }
                    acc.reduce();
                    r(q, i, j, k) = std::move(acc);
                }
    return r;
}

/// nabla^p nabla^q h^{ij} for the connection with symbols b of the metric G.
template <class E>
Tensor<typename E::Scalar> second_covariant_derivative(const E& e, const Matrix<typename E::Scalar>& G,
                                                       const Tensor<typename E::Scalar>& b,
                                                       const PolyMatrix& h) {
    using S = typename E::Scalar;
    const int n = b.n();
    const auto un = static_cast<std::size_t>(n);
    Matrix<S> H = h.map([&](const MultiPoly& p) { return e.lift(p); });
    std::vector<Matrix<S>> dH;
    for (int l = 0; l < n; ++l)
        dH.push_back(h.map([&](const MultiPoly& p) { return e.lift(p.diff(l)); }));
    Tensor<S> V(n, 3, e.zero());
    for (std::size_t q = 0; q < un; ++q)
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j) {
                S acc = e.zero();
                for (std::size_t l = 0; l < un; ++l) {
                    if (!G(q, l).is_zero() && !dH[l](i, j).is_zero())
                        acc += G(q, l) * dH[l](i, j);
                    if (!b(q, i, l).is_zero() && !H(l, j).is_zero())
                        acc -= b(q, i, l) * H(l, j);
                    if (!b(q, j, l).is_zero() && !H(i, l).is_zero())
                        acc -= b(q, j, l) * H(i, l);
                }
                acc.reduce();
                V(q, i, j) = std::move(acc);
            }
    auto dV = all_derivatives(V);
    Tensor<S> W(n, 4, e.zero());
    for (std::size_t p = 0; p < un; ++p)
        for (std::size_t q = 0; q < un; ++q)
            for (std::size_t i = 0; i < un; ++i)
                for (std::size_t j = 0; j < un; ++j) {
                    S acc = e.zero();
                    for (std::size_t l = 0; l < un; ++l) {
                        if (!G(p, l).is_zero() && !dV[l](q, i, j).is_zero())
                            acc += G(p, l) * dV[l](q, i, j);
                        if (!b(p, q, l).is_zero() && !V(l, i, j).is_zero())
                            acc -= b(p, q, l) * V(l, i, j);
                        if (!b(p, i, l).is_zero() && !V(q, l, j).is_zero())
                            acc -= b(p, i, l) * V(q, l, j);
                        if (!b(p, j, l).is_zero() && !V(q, i, l).is_zero())
                            acc -= b(p, j, l) * V(q, i, l);
                    }
                    acc.reduce();
                    W(p, q, i, j) = std::move(acc);
                }
    return W;
}

/// N(k, i, j) = L^s_i d_s L^k_j - L^s_j d_s L^k_i + L^k_s d_j L^s_i - L^k_s d_i L^s_j.
template <class S>
Tensor<S> nijenhuis(const Matrix<S>& L, int n, const S& zero) {
    auto dL = matrix_derivatives(L, n);
    const auto un = static_cast<std::size_t>(n);
    Tensor<S> N(n, 3, zero);
    for (std::size_t k = 0; k < un; ++k)
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = 0; j < un; ++j) {
                S acc = zero;
                for (std::size_t s = 0; s < un; ++s) {
                    if (!L(s, i).is_zero() && !dL[s](k, j).is_zero())
                        acc += L(s, i) * dL[s](k, j);
                    if (!L(s, j).is_zero() && !dL[s](k, i).is_zero())
                        acc -= L(s, j) * dL[s](k, i);
                    if (!L(k, s).is_zero() && !dL[j](s, i).is_zero())
                        acc += L(k, s) * dL[j](s, i);
                    if (!L(k, s).is_zero() && !dL[i](s, j).is_zero())
                        acc -= L(k, s) * dL[i](s, j);
                }
                N(static_cast<int>(k), static_cast<int>(i), static_cast<int>(j)) = std::move(acc);
            }
    return N;
}

/// Scalar-generic residual bookkeeping: the first failing index in
/// lexicographic order wins, and across sample points the first failing point.
class ConditionLog {
  public:
    struct Entry {
        bool pass = true;
        std::vector<int> index;
        std::string residual;
    };

    template <class S, class E>
    void record(const std::string& name, const Tensor<S>& r, const E& e) {
        Entry& entry = touch(name);
        if (!entry.pass)
            return;
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (vanishes(r.flat(k)))
                continue;
            entry.pass = false;
            entry.index = r.unflatten(k);
            for (auto& x : entry.index)
                ++x;
            entry.residual = e.describe(r.flat(k));
            return;
        }
    }

    void record_poly(const std::string& name, const Tensor<MultiPoly>& r, const std::vector<std::string>& names) {
        Entry& entry = touch(name);
        if (!entry.pass)
            return;
        if (auto k = r.first_nonzero()) {
            entry.pass = false;
            entry.index = r.unflatten(*k);
            for (auto& x : entry.index)
                ++x;
            entry.residual = r.flat(*k).str(names);
        }
    }

    const Entry& get(const std::string& name) const { return entries_.at(name); }
    const std::vector<std::string>& order() const { return order_; }

  private:
    Entry& touch(const std::string& name) {
        auto [it, inserted] = entries_.try_emplace(name);
        if (inserted)
            order_.push_back(name);
        return it->second;
    }
    std::map<std::string, Entry> entries_;
    std::vector<std::string> order_;
};

} // namespace hydro::detail
