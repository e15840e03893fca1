#include "hydro/exact/multipoly.hpp"

#include "hydro/errors.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace hydro {

namespace {

bool term_desc(const Term& a, const Term& b) { return grlex_less(b.m, a.m); }

void check_var(int nvars, int var) {
    if (var < 0 || var >= nvars)
        throw OutOfRange("variable index " + std::to_string(var + 1) + " out of range 1.." +
                         std::to_string(nvars));
}

} // namespace

Monomial Monomial::var(int i, unsigned power) {
    if (power > 255)
        throw ArithmeticError("exponent overflow");
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
    m.deg = static_cast<std::uint16_t>(power);
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg > o.deg)
        return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i])
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
        unsigned s = unsigned(e[i]) + o.e[i];
        if (s > 255)
            throw ArithmeticError("exponent overflow");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = static_cast<std::uint16_t>(deg + o.deg);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
        r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
    r.deg = static_cast<std::uint16_t>(deg - o.deg);
    return r;
}

std::size_t Monomial::hash() const {
    std::uint64_t a, b;
    std::memcpy(&a, e.data(), 8);
    std::memcpy(&b, e.data() + 8, 8);
    std::uint64_t h = a * 0x9e3779b97f4a7c15ULL;
    h ^= (b + 0x7f4a7c159e3779b9ULL) * 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVars)
        throw OutOfRange("polynomial ring with " + std::to_string(nvars) + " variables");
}

MultiPoly::MultiPoly(int nvars, const Rational& c) : MultiPoly(nvars) {
    if (!c.is_zero())
        terms_.push_back({Monomial{}, c});
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    MultiPoly p(nvars);
    check_var(nvars, i);
    p.terms_.push_back({Monomial::var(i), Rational(1)});
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, const Monomial& m, const Rational& c) {
    MultiPoly p(nvars);
    for (int i = nvars; i < kMaxVars; ++i)
        if (m.e[i] != 0)
            throw OutOfRange("monomial uses a variable outside the ring");
    if (!c.is_zero())
        p.terms_.push_back({m, c});
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
    MultiPoly p(nvars);
    std::sort(terms.begin(), terms.end(), term_desc);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().m == t.m)
            p.terms_.back().c += t.c;
        else
            p.terms_.push_back(std::move(t));
        if (p.terms_.size() >= 2 && p.terms_[p.terms_.size() - 2].c.is_zero())
            p.terms_.erase(p.terms_.end() - 2);
    }
    if (!p.terms_.empty() && p.terms_.back().c.is_zero())
        p.terms_.pop_back();
    return p;
}

void MultiPoly::check_same(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
        throw DimensionMismatch("polynomial rings differ: " + std::to_string(nvars_) + " vs " +
                                std::to_string(o.nvars_) + " variables");
}

Rational MultiPoly::constant_term() const {
    if (!terms_.empty() && terms_.back().m.is_one())
        return terms_.back().c;
    return Rational(0);
}

int MultiPoly::degree_in(int var) const {
    check_var(nvars_, var);
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_)
        d = std::max(d, int(t.m.e[var]));
    return d;
}

int MultiPoly::degree_in_block(int count) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) {
        int s = 0;
        for (int i = 0; i < count; ++i)
            s += t.m.e[i];
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::diff(int var) const {
    check_var(nvars_, var);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (t.m.e[var] == 0)
            continue;
        Term d{t.m, t.c * Rational(long(t.m.e[var]))};
        d.m.e[var]--;
        d.m.deg--;
        out.push_back(std::move(d));
    }
    // differentiation can reorder terms of equal degree only among themselves
    // when the order is graded; resort to be safe
    return from_terms(nvars_, std::move(out));
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionMismatch("evaluation point has length " + std::to_string(point.size()) +
                                ", expected " + std::to_string(nvars_));
    // cache powers per variable
    std::vector<std::vector<Rational>> powers(static_cast<std::size_t>(nvars_));
    auto power = [&](int v, int e) -> const Rational& {
        auto& pw = powers[static_cast<std::size_t>(v)];
        if (pw.empty())
            pw.push_back(Rational(1));
        while (static_cast<int>(pw.size()) <= e)
            pw.push_back(pw.back() * point[static_cast<std::size_t>(v)]);
        return pw[static_cast<std::size_t>(e)];
    };
    mpq_class acc = 0;
    mpq_class prod;
    for (const auto& t : terms_) {
        prod = t.c.raw();
        for (int v = 0; v < nvars_; ++v)
            if (t.m.e[v])
                prod *= power(v, t.m.e[v]).raw();
        acc += prod;
    }
    return Rational(acc);
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
    check_var(nvars_, var);
    check_same(value);
    int maxe = std::max(0, degree_in(var));
    std::vector<MultiPoly> pw{MultiPoly(nvars_, Rational(1))};
    for (int i = 1; i <= maxe; ++i)
        pw.push_back(pw.back() * value);
    // group terms by exponent of var
    std::vector<std::vector<Term>> groups(static_cast<std::size_t>(maxe + 1));
    for (const auto& t : terms_) {
        Term r = t;
        int e = r.m.e[var];
        r.m.e[var] = 0;
        r.m.deg = static_cast<std::uint16_t>(r.m.deg - e);
        groups[static_cast<std::size_t>(e)].push_back(std::move(r));
    }
    MultiPoly out(nvars_);
    for (int e = 0; e <= maxe; ++e) {
        if (groups[static_cast<std::size_t>(e)].empty())
            continue;
        out += from_terms(nvars_, std::move(groups[static_cast<std::size_t>(e)])) * pw[static_cast<std::size_t>(e)];
    }
    return out;
}

MultiPoly MultiPoly::substitute(int var, const Rational& value) const {
    check_var(nvars_, var);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term r = t;
        int e = r.m.e[var];
        if (e) {
            r.m.e[var] = 0;
            r.m.deg = static_cast<std::uint16_t>(r.m.deg - e);
            r.c *= value.pow(e);
        }
        out.push_back(std::move(r));
    }
    return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::coefficient(int var, int power) const {
    check_var(nvars_, var);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.m.e[var] != power)
            continue;
        Term r = t;
        r.m.e[var] = 0;
        r.m.deg = static_cast<std::uint16_t>(r.m.deg - power);
        out.push_back(std::move(r));
    }
    return from_terms(nvars_, std::move(out));
}

MultiPoly MultiPoly::homogeneous_part(int count, int deg) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int s = 0;
        for (int i = 0; i < count; ++i)
            s += t.m.e[i];
        if (s == deg)
            out.push_back(t);
    }
    MultiPoly p(nvars_);
    p.terms_ = std::move(out); // subset of a sorted list stays sorted
    return p;
}

MultiPoly MultiPoly::embed(int nvars, int offset) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term r{Monomial{}, t.c};
        for (int i = 0; i < nvars_; ++i) {
            if (!t.m.e[i])
                continue;
            int j = i + offset;
            if (j < 0 || j >= nvars)
                throw OutOfRange("embedding drops a used variable");
            r.m.e[j] = t.m.e[i];
        }
        r.m.deg = t.m.deg;
        out.push_back(std::move(r));
    }
    return from_terms(nvars, std::move(out));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same(o);
    if (o.terms_.empty())
        return *this;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const Monomial& a = terms_[i].m;
        const Monomial& b = o.terms_[j].m;
        if (a == b) {
            Rational c = terms_[i].c + o.terms_[j].c;
            if (!c.is_zero())
                out.push_back({a, std::move(c)});
            ++i;
            ++j;
        } else if (grlex_less(b, a)) {
            out.push_back(std::move(terms_[i++]));
        } else {
            out.push_back(o.terms_[j++]);
        }
    }
    for (; i < terms_.size(); ++i)
        out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j)
        out.push_back(o.terms_[j]);
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_)
        t.c = -t.c;
    return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.c *= c;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.nvars_);
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    if (b.terms_.size() == 1 && b.terms_[0].m.is_one())
        return a * b.terms_[0].c;
    if (a.terms_.size() == 1 && a.terms_[0].m.is_one())
        return b * a.terms_[0].c;
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        // monomial times polynomial keeps the order
        const MultiPoly& mono = a.terms_.size() == 1 ? a : b;
        const MultiPoly& poly = a.terms_.size() == 1 ? b : a;
        const Term& mt = mono.terms_[0];
        r.terms_.reserve(poly.terms_.size());
        for (const auto& t : poly.terms_)
            r.terms_.push_back({t.m * mt.m, t.c * mt.c});
        return r;
    }
    std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    mpq_class prod;
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            Monomial m = ta.m * tb.m;
            mpq_mul(prod.get_mpq_t(), ta.c.raw().get_mpq_t(), tb.c.raw().get_mpq_t());
            auto [it, inserted] = acc.try_emplace(m, prod);
            if (!inserted)
                it->second += prod;
        }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0)
            r.terms_.push_back({m, Rational(std::move(c))});
    std::sort(r.terms_.begin(), r.terms_.end(), term_desc);
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result(nvars_, Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].m == b.terms_[i].m) || a.terms_[i].c != b.terms_[i].c)
            return false;
    return true;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& b) const {
    check_same(b);
    if (b.is_zero())
        throw ArithmeticError("polynomial division by zero");
    if (is_zero())
        return MultiPoly(nvars_);
    if (b.is_constant())
        return *this * b.terms_[0].c.inverse();
    if (b.is_monomial()) {
        const Term& bt = b.terms_[0];
        Rational inv = bt.c.inverse();
        MultiPoly q(nvars_);
        q.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!bt.m.divides(t.m))
                return std::nullopt;
            q.terms_.push_back({t.m / bt.m, t.c * inv});
        }
        return q;
    }
    // cheap necessary conditions
    if (total_degree() < b.total_degree())
        return std::nullopt;
    const Term& lb = b.terms_.front();
    if (!lb.m.divides(terms_.front().m) || !b.terms_.back().m.divides(terms_.back().m))
        return std::nullopt;
    Rational inv = lb.c.inverse();
    MultiPoly rem = *this;
    std::vector<Term> quot;
    while (!rem.is_zero()) {
        const Term& lr = rem.terms_.front();
        if (!lb.m.divides(lr.m))
            return std::nullopt;
        Term qt{lr.m / lb.m, lr.c * inv};
        MultiPoly step(nvars_);
        step.terms_.reserve(b.terms_.size());
        for (const auto& t : b.terms_)
            step.terms_.push_back({t.m * qt.m, t.c * qt.c});
        rem -= step;
        quot.push_back(std::move(qt));
    }
    MultiPoly q(nvars_);
    q.terms_ = std::move(quot); // leading terms come out in decreasing order
    return q;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero())
        return *this;
    return *this * terms_.front().c.inverse();
}

Rational MultiPoly::content() const {
    if (is_zero())
        return Rational(0);
    mpz_class g = 0, l = 1;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.raw().get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.raw().get_den_mpz_t());
    }
    Rational c(g, l);
    return terms_.front().c.sign() < 0 ? -c : c;
}

namespace {

std::string monomial_str(const Monomial& m, int nvars, std::span<const std::string> names) {
    std::string s;
    for (int i = 0; i < nvars; ++i) {
        if (!m.e[i])
            continue;
        if (!s.empty())
            s += "*";
        s += names.empty() ? "u" + std::to_string(i + 1) : names[static_cast<std::size_t>(i)];
        if (m.e[i] > 1)
            s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

} // namespace

std::string MultiPoly::str() const { return str({}); }

std::string MultiPoly::str(std::span<const std::string> names) const {
    if (terms_.empty())
        return "0";
    if (!names.empty() && static_cast<int>(names.size()) < nvars_)
        throw DimensionMismatch("not enough variable names");
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        if (!first) {
            s += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0)
                c = -c;
        }
        s += c.str();
        std::string ms = monomial_str(t.m, nvars_, names);
        if (!ms.empty())
            s += "*" + ms;
        first = false;
    }
    return s;
}

std::size_t MultiPoly::hash() const {
    std::size_t h = static_cast<std::size_t>(nvars_);
    for (const auto& t : terms_)
        h = h * 1000003u ^ (t.m.hash() + 0x9e37u * t.c.hash());
    return h;
}

MultiPoly partial_derivative(const MultiPoly& p, int k) {
    if (k < 1 || k > p.nvars())
        throw OutOfRange("partial derivative index " + std::to_string(k) + " out of range 1.." +
                         std::to_string(p.nvars()));
    return p.diff(k - 1);
}

Rational eval_at(const MultiPoly& p, std::span<const Rational> point) { return p.eval(point); }

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
    case PolyOp::Add:
        return a + b;
    case PolyOp::Sub:
        return a - b;
    case PolyOp::Mul:
        return a * b;
    }
    throw Error("unknown polynomial operation");
}

} // namespace hydro
