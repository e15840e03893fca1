#include "hydro/exact/roots.hpp"

#include "hydro/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace hydro {

void upoly_trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    upoly_trim(r);
    return r;
}

std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b) {
    UPoly bb = b;
    upoly_trim(bb);
    if (bb.empty())
        throw ArithmeticError("polynomial division by zero");
    UPoly r = a;
    upoly_trim(r);
    if (r.size() < bb.size())
        return {{}, r};
    UPoly q(r.size() - bb.size() + 1);
    Rational inv = bb.back().inverse();
    for (std::size_t k = r.size(); k-- >= bb.size();) {
        Rational c = r[k] * inv;
        q[k - (bb.size() - 1)] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j < bb.size(); ++j)
                r[k - (bb.size() - 1) + j] -= c * bb[j];
        if (k == bb.size() - 1)
            break;
    }
    upoly_trim(r);
    upoly_trim(q);
    return {q, r};
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    upoly_trim(a);
    upoly_trim(b);
    while (!b.empty()) {
        auto r = upoly_divmod(a, b).second;
        if (!r.empty()) {
            Rational inv = r.back().inverse();
            for (auto& c : r)
                c *= inv;
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational inv = a.back().inverse();
        for (auto& c : a)
            c *= inv;
    }
    return a;
}

UPoly upoly_derivative(const UPoly& p) {
    UPoly d;
    for (std::size_t k = 1; k < p.size(); ++k)
        d.push_back(p[k] * Rational(long(k)));
    upoly_trim(d);
    return d;
}

namespace {

using cplx = std::complex<long double>;

std::vector<cplx> numeric_roots(const UPoly& p) {
    const std::size_t n = p.size() - 1;
    std::vector<long double> c(p.size());
    long double lead = static_cast<long double>(p.back().to_double());
    for (std::size_t k = 0; k <= n; ++k)
        c[k] = static_cast<long double>(p[k].to_double()) / lead;
    auto eval = [&](cplx z) {
        cplx v = 1;
        for (std::size_t k = n; k-- > 0;)
            v = v * z + c[k];
        return v;
    };
    auto deriv = [&](cplx z) {
        cplx v = static_cast<long double>(n);
        for (std::size_t k = n; k-- > 1;)
            v = v * z + static_cast<long double>(k) * c[k];
        return v;
    };
    long double radius = 1;
    for (std::size_t k = 0; k < n; ++k)
        radius = std::max(radius, 1 + std::abs(c[k]));
    std::vector<cplx> z(n);
    const cplx seed(0.4L, 0.9L);
    for (std::size_t k = 0; k < n; ++k)
        z[k] = std::pow(seed, static_cast<long double>(k)) * (radius * 0.5L);
    for (int it = 0; it < 2000; ++it) {
        long double change = 0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx den = 1;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    den *= z[i] - z[j];
            if (std::abs(den) == 0)
                den = 1e-30L;
            cplx step = eval(z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step) / (1 + std::abs(z[i])));
        }
        if (change < 1e-17L)
            break;
    }
    for (auto& r : z)
        for (int it = 0; it < 5; ++it) {
            cplx d = deriv(r);
            if (std::abs(d) == 0)
                break;
            r -= eval(r) / d;
        }
    return z;
}

Rational round_over(long double x, const mpz_class& q) {
    long double scaled = x * static_cast<long double>(q.get_d());
    long double r = std::round(scaled);
    mpz_class p;
    if (std::fabs(r) < 9e18L) {
        p = mpz_class(static_cast<long>(r));
    } else {
        p = mpz_class(static_cast<double>(r));
    }
    return Rational(p, q);
}

bool divides_exactly(const UPoly& p, const UPoly& f) { return upoly_divmod(p, f).second.empty(); }

} // namespace

RootResult rational_roots(const UPoly& input) {
    UPoly p = input;
    upoly_trim(p);
    if (p.empty())
        throw ArithmeticError("roots of the zero polynomial");
    RootResult out;
    UPoly rest = p;
    // zero roots first
    int zmult = 0;
    while (rest.size() > 1 && rest[0].is_zero()) {
        rest.erase(rest.begin());
        ++zmult;
    }
    if (zmult)
        out.rational.emplace_back(Rational(0), zmult);
    if (rest.size() > 1) {
        UPoly sqf = upoly_divmod(rest, upoly_gcd(rest, upoly_derivative(rest))).first;
        // denominator bound: leading coefficient of the primitive integer form
        mpz_class l = 1;
        for (const auto& c : sqf)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
        mpz_class g = 0;
        for (const auto& c : sqf) {
            mpz_class v = c.numerator() * (l / c.denominator());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        mpz_class lead = sqf.back().numerator() * (l / sqf.back().denominator()) / g;
        lead = abs(lead);
        auto approx = numeric_roots(sqf);
        std::vector<Rational> found_real;
        std::vector<GaussianRational> found_complex;
        for (const auto& z : approx) {
            Rational re = round_over(z.real(), lead);
            Rational im = round_over(z.imag(), lead);
            if (im.is_zero() || std::fabs(z.imag()) < 1e-9L * (1 + std::fabs(z.real()))) {
                if (std::find(found_real.begin(), found_real.end(), re) != found_real.end())
                    continue;
                if (divides_exactly(rest, UPoly{-re, Rational(1)}))
                    found_real.push_back(re);
            } else {
                if (im.sign() < 0)
                    im = -im;
                GaussianRational root(re, im);
                if (std::find(found_complex.begin(), found_complex.end(), root) != found_complex.end())
                    continue;
                UPoly quad{re * re + im * im, Rational(-2) * re, Rational(1)};
                if (divides_exactly(rest, quad))
                    found_complex.push_back(root);
            }
        }
        std::sort(found_real.begin(), found_real.end());
        for (const auto& r : found_real) {
            UPoly f{-r, Rational(1)};
            int m = 0;
            while (rest.size() > 1) {
                auto [q, rem] = upoly_divmod(rest, f);
                if (!rem.empty())
                    break;
                rest = std::move(q);
                ++m;
            }
            out.rational.emplace_back(r, m);
        }
        std::sort(found_complex.begin(), found_complex.end());
        for (const auto& z : found_complex) {
            UPoly quad{z.norm(), Rational(-2) * z.re, Rational(1)};
            int m = 0;
            while (rest.size() > 2) {
                auto [q, rem] = upoly_divmod(rest, quad);
                if (!rem.empty())
                    break;
                rest = std::move(q);
                ++m;
            }
            out.gaussian.emplace_back(z.conj(), m);
            out.gaussian.emplace_back(z, m);
        }
        std::sort(out.rational.begin(), out.rational.end());
        std::sort(out.gaussian.begin(), out.gaussian.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    Rational inv = rest.back().inverse();
    for (auto& c : rest)
        c *= inv;
    out.residual = rest;
    return out;
}

RootResult rational_roots(const MultiPoly& p) {
    int var = -1;
    for (int v = 0; v < p.nvars(); ++v)
        if (p.depends_on(v)) {
            if (var >= 0)
                throw DimensionMismatch("rational_roots needs a univariate polynomial");
            var = v;
        }
    UPoly coeffs;
    if (var < 0) {
        coeffs.push_back(p.constant_term());
    } else {
        coeffs.resize(static_cast<std::size_t>(p.degree_in(var)) + 1);
        for (const auto& t : p.terms())
            coeffs[t.m.e[var]] = t.c;
    }
    return rational_roots(coeffs);
}

UPoly char_poly(const Matrix<Rational>& a) {
    if (!a.square())
        throw DimensionMismatch("characteristic polynomial of " + a.shape() + " matrix");
    const std::size_t n = a.rows();
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    UPoly c(n + 1);
    c[n] = Rational(1);
    Matrix<Rational> m(n, n, Rational(0));
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<Rational> am = a * m;
        for (std::size_t i = 0; i < n; ++i)
            am(i, i) += c[n - k + 1];
        m = std::move(am);
        Matrix<Rational> prod = a * m;
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i)
            tr += prod(i, i);
        c[n - k] = -tr / Rational(long(k));
    }
    return c;
}

} // namespace hydro
