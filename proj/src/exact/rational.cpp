#include "hydro/exact/rational.hpp"

#include "hydro/errors.hpp"

namespace hydro {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0)
        throw ArithmeticError("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0)
        throw ArithmeticError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        if (s.empty())
            throw ParseError("empty integer in rational '" + std::string(text) + "'");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw ParseError("bad integer in rational '" + std::string(text) + "'");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw ParseError("bad character in rational '" + std::string(text) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return mpz_class(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    mpz_class den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

Rational Rational::inverse() const {
    if (is_zero())
        throw ArithmeticError("inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
    // low limbs are enough to spread values
    std::size_t h = mpz_size(v_.get_num_mpz_t()) ? mpz_getlimbn(v_.get_num_mpz_t(), 0) : 0;
    h ^= sgn(v_) < 0 ? 0x9e3779b97f4a7c15ULL : 0;
    h = h * 31 + mpz_getlimbn(v_.get_den_mpz_t(), 0);
    return h;
}

bool rational_sqrt(const Rational& r, Rational& out) {
    if (r.sign() < 0)
        return false;
    mpz_class n = r.numerator(), d = r.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    out = Rational(sn, sd);
    return true;
}

} // namespace hydro
