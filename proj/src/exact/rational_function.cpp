#include "hydro/exact/rational_function.hpp"

#include "hydro/errors.hpp"

#include <optional>

namespace hydro {

RationalFunction::RationalFunction(MultiPoly p)
    : num_(std::move(p)), den_(num_.nvars(), Rational(1)) {}

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars())
        throw DimensionMismatch("numerator and denominator in different rings");
    if (den_.is_zero())
        throw ArithmeticError("rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    reduced_ = true;
    if (num_.is_zero()) {
        den_ = MultiPoly(num_.nvars(), Rational(1));
        return;
    }
    if (den_.is_constant()) {
        num_ *= den_.constant_term().inverse();
        den_ = MultiPoly(num_.nvars(), Rational(1));
        return;
    }
    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = MultiPoly(num_.nvars(), Rational(1));
        return;
    }
    try {
        MultiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
    } catch (const GcdLimitExceeded&) {
        reduced_ = false;
    }
    make_monic();
}

void RationalFunction::make_monic() {
    Rational lc = den_.leading().c;
    if (!lc.is_one()) {
        num_ *= lc.inverse();
        den_ *= lc.inverse();
    }
}

namespace {

std::optional<MultiPoly> try_gcd(const MultiPoly& a, const MultiPoly& b) {
    try {
        return gcd(a, b);
    } catch (const GcdLimitExceeded&) {
        return std::nullopt;
    }
}

MultiPoly quotient(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_constant())
        return a * b.constant_term().inverse();
    return *a.divide_exact(b);
}

} // namespace

// Sum and product of reduced fractions only need gcds of the smaller pieces.
RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    auto g = reduced_ && o.reduced_ ? try_gcd(den_, o.den_) : std::nullopt;
    if (!g) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    MultiPoly d1 = quotient(den_, *g), d2 = quotient(o.den_, *g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = den_ * d2;
    if (num_.is_zero()) {
        den_ = MultiPoly(num_.nvars(), Rational(1));
        return *this;
    }
    if (!g->is_constant()) {
        auto h = try_gcd(num_, *g);
        if (!h) {
            reduced_ = false;
        } else if (!h->is_constant()) {
            num_ = quotient(num_, *h);
            den_ = quotient(den_, *h);
        }
    }
    make_monic();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) {
        *this = RationalFunction(nvars());
        return *this;
    }
    if (!reduced_ || !o.reduced_) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    auto g1 = try_gcd(num_, o.den_);
    auto g2 = try_gcd(o.num_, den_);
    if (!g1 || !g2) {
        num_ = num_ * o.num_;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    num_ = quotient(num_, *g1) * quotient(o.num_, *g2);
    den_ = quotient(den_, *g2) * quotient(o.den_, *g1);
    make_monic();
    return *this;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero())
        throw ArithmeticError("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::diff(int var) const {
    if (den_.is_constant())
        return RationalFunction(num_.diff(var));
    MultiPoly dd = den_.diff(var);
    if (dd.is_zero())
        return RationalFunction(num_.diff(var), den_);
    // with g = gcd(d, d'): (n/d)' = (n' d/g - n d'/g) / (d * d/g)
    auto g = try_gcd(den_, dd);
    if (!g)
        return RationalFunction(num_.diff(var) * den_ - num_ * dd, den_ * den_);
    MultiPoly h = quotient(den_, *g);
    return RationalFunction(num_.diff(var) * h - num_ * quotient(dd, *g), den_ * h);
}

Rational RationalFunction::eval(std::span<const Rational> point) const {
    Rational d = den_.eval(point);
    if (d.is_zero())
        throw ArithmeticError("rational function evaluated at a pole");
    return num_.eval(point) / d;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_)
        return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalFunction::str() const { return str({}); }

std::string RationalFunction::str(std::span<const std::string> names) const {
    if (den_.is_constant())
        return num_.str(names);
    return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

} // namespace hydro
