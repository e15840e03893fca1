#include "hydro/errors.hpp"
#include "hydro/exact/multipoly.hpp"
#include "hydro/exact/roots.hpp"

#include <algorithm>

namespace hydro {

namespace {

thread_local std::size_t g_gcd_cap = 100000;

void check_cap(const MultiPoly& p) {
    if (p.size() > g_gcd_cap)
        throw GcdLimitExceeded();
}

// Coefficients of p as a polynomial in variable v: p = sum_k out[k] * v^k.
std::vector<MultiPoly> split(const MultiPoly& p, int v) {
    int d = std::max(0, p.degree_in(v));
    std::vector<std::vector<Term>> parts(static_cast<std::size_t>(d + 1));
    for (const auto& t : p.terms()) {
        Term r = t;
        int e = r.m.e[v];
        r.m.e[v] = 0;
        r.m.deg = static_cast<std::uint16_t>(r.m.deg - e);
        parts[static_cast<std::size_t>(e)].push_back(std::move(r));
    }
    std::vector<MultiPoly> out;
    out.reserve(parts.size());
    for (auto& part : parts)
        out.push_back(MultiPoly::from_terms(p.nvars(), std::move(part)));
    return out;
}

MultiPoly join(const std::vector<MultiPoly>& c, int v, int nvars) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < c.size(); ++k)
        for (const auto& t : c[k].terms()) {
            Term r = t;
            r.m.e[v] = static_cast<std::uint8_t>(k);
            r.m.deg = static_cast<std::uint16_t>(r.m.deg + k);
            terms.push_back(std::move(r));
        }
    return MultiPoly::from_terms(nvars, std::move(terms));
}

void trim(std::vector<MultiPoly>& c) {
    while (c.size() > 1 && c.back().is_zero())
        c.pop_back();
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly monomial_gcd(const MultiPoly& mono, const MultiPoly& other) {
    Monomial m = mono.leading().m;
    for (const auto& t : other.terms())
        for (int i = 0; i < kMaxVars; ++i)
            m.e[i] = std::min(m.e[i], t.m.e[i]);
    m.deg = 0;
    for (int i = 0; i < kMaxVars; ++i)
        m.deg = static_cast<std::uint16_t>(m.deg + m.e[i]);
    return MultiPoly::monomial(mono.nvars(), m, Rational(1));
}

MultiPoly content_in(const std::vector<MultiPoly>& c) {
    MultiPoly g(c.front().nvars());
    for (const auto& x : c) {
        if (x.is_zero())
            continue;
        g = g.is_zero() ? x.monic() : gcd_rec(g, x);
        if (g.is_constant())
            break;
    }
    return g;
}

std::vector<MultiPoly> divide_all(const std::vector<MultiPoly>& c, const MultiPoly& g) {
    std::vector<MultiPoly> out;
    out.reserve(c.size());
    for (const auto& x : c) {
        auto q = x.divide_exact(g);
        if (!q)
            throw Error("internal: content does not divide coefficient");
        out.push_back(std::move(*q));
    }
    return out;
}

// Divides out the rational content so PRS coefficients stay integral and small.
void make_integral_primitive(std::vector<MultiPoly>& c) {
    mpz_class g = 0, l = 1;
    for (const auto& x : c)
        for (const auto& t : x.terms()) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.raw().get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.raw().get_den_mpz_t());
        }
    if (g == 0)
        return;
    Rational scale(l, g);
    if (scale.is_one())
        return;
    for (auto& x : c)
        x *= scale;
}

// Pseudo-remainder of a by b as polynomials in the split variable.
std::vector<MultiPoly> prem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
    const MultiPoly& lb = b.back();
    std::size_t db = b.size() - 1;
    while (a.size() - 1 >= db && !(a.size() == 1 && a[0].is_zero())) {
        std::size_t da = a.size() - 1;
        MultiPoly la = a.back();
        std::size_t shift = da - db;
        for (auto& x : a) {
            x = x * lb;
            check_cap(x);
        }
        for (std::size_t k = 0; k <= db; ++k) {
            a[k + shift] -= la * b[k];
            check_cap(a[k + shift]);
        }
        a.pop_back();
        trim(a);
        if (a.empty())
            a.push_back(MultiPoly(lb.nvars()));
        if (db == 0)
            break;
    }
    return a;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    const int n = a.nvars();
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.is_constant() || b.is_constant())
        return MultiPoly(n, Rational(1));
    if (a.is_monomial())
        return monomial_gcd(a, b);
    if (b.is_monomial())
        return monomial_gcd(b, a);
    if (a.size() <= b.size()) {
        if (b.divide_exact(a))
            return a.monic();
    } else if (a.divide_exact(b)) {
        return b.monic();
    }
    // main variable: the one present in both with the smallest combined degree
    int v = -1;
    int best = 0;
    for (int i = 0; i < n; ++i) {
        int da = a.degree_in(i), db = b.degree_in(i);
        if (da > 0 && db > 0 && (v < 0 || da + db < best)) {
            v = i;
            best = da + db;
        }
    }
    if (v < 0) {
        // no shared variable: any common factor lives in the coefficients
        for (int i = 0; i < n; ++i) {
            if (a.degree_in(i) > 0)
                return gcd_rec(content_in(split(a, i)), b);
            if (b.degree_in(i) > 0)
                return gcd_rec(a, content_in(split(b, i)));
        }
        return MultiPoly(n, Rational(1));
    }
    auto ca = split(a, v);
    auto cb = split(b, v);
    MultiPoly conta = content_in(ca);
    MultiPoly contb = content_in(cb);
    MultiPoly cont = gcd_rec(conta, contb);
    auto pa = divide_all(ca, conta);
    auto pb = divide_all(cb, contb);
    make_integral_primitive(pa);
    make_integral_primitive(pb);
    if (pa.size() < pb.size())
        std::swap(pa, pb);
    while (true) {
        if (pb.size() == 1) {
            if (pb[0].is_zero())
                break;
            return cont.monic();
        }
        auto r = prem(pa, pb);
        trim(r);
        if (r.size() == 1 && r[0].is_zero())
            break;
        pa = std::move(pb);
        MultiPoly cr = content_in(r);
        pb = divide_all(r, cr);
        make_integral_primitive(pb);
    }
    MultiPoly prim = join(pb, v, n);
    return (cont * prim).monic();
}

// Specializes every variable except v to a fixed small integer.
UPoly specialize(const MultiPoly& p, int v) {
    UPoly out(static_cast<std::size_t>(std::max(0, p.degree_in(v)) + 1), Rational(0));
    for (const auto& t : p.terms()) {
        Rational c = t.c;
        for (int i = 0; i < p.nvars(); ++i)
            if (i != v && t.m.e[i])
                c *= Rational(2 * i + 3).pow(t.m.e[i]);
        out[t.m.e[v]] += c;
    }
    return out;
}

// Sufficient test for a constant gcd: in every shared variable the
// specialized gcd is constant while the leading coefficients survive.
bool surely_coprime(const MultiPoly& a, const MultiPoly& b) {
    for (int v = 0; v < a.nvars(); ++v) {
        int da = a.degree_in(v), db = b.degree_in(v);
        if (da <= 0 || db <= 0)
            continue;
        UPoly sa = specialize(a, v), sb = specialize(b, v);
        if (sa.back().is_zero() || sb.back().is_zero())
            return false;
        if (upoly_gcd(sa, sb).size() > 1)
            return false;
    }
    return true;
}

} // namespace

std::size_t gcd_term_cap() { return g_gcd_cap; }
void set_gcd_term_cap(std::size_t cap) { g_gcd_cap = cap; }

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars())
        throw DimensionMismatch("gcd of polynomials in different rings");
    if (a.is_zero() && b.is_zero())
        return MultiPoly(a.nvars());
    if (!a.is_zero() && !b.is_zero() && surely_coprime(a, b))
        return MultiPoly(a.nvars(), Rational(1));
    return gcd_rec(a, b);
}

} // namespace hydro
