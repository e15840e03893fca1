#pragma once

#include "hydro/exact/multipoly.hpp"

#include <string>

namespace hydro {

/// Quotient num/den of polynomials. The denominator is monic; when the gcd
/// computation stays under the term cap the fraction is also in lowest terms.
class RationalFunction {
  public:
    RationalFunction() = default;
    explicit RationalFunction(int nvars) : num_(nvars), den_(nvars, Rational(1)) {}
    RationalFunction(MultiPoly p); // NOLINT(google-explicit-constructor)
    RationalFunction(MultiPoly num, MultiPoly den);

    int nvars() const { return num_.nvars(); }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool reduced() const { return reduced_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;
    RationalFunction inverse() const;

    RationalFunction diff(int var) const;
    Rational eval(std::span<const Rational> point) const;

    /// Cross-multiplied equality; valid for reduced and unreduced values alike.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);

    /// "num" for polynomials, otherwise "(num)/(den)".
    std::string str() const;
    std::string str(std::span<const std::string> names) const;

  private:
    void normalize();
    void make_monic();
    MultiPoly num_;
    MultiPoly den_;
    bool reduced_ = true;
};

} // namespace hydro
