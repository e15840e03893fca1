#pragma once

#include "hydro/errors.hpp"
#include "hydro/exact/rational.hpp"

#include <string>

namespace hydro {

/// Element a + bi of Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long r) : re(r) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational inverse() const {
        Rational n = norm();
        if (n.is_zero())
            throw ArithmeticError("inverse of zero");
        return {re / n, -im / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    /// Total order used only for deterministic sorting: by real part, then imaginary part.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re)
            return a.re < b.re;
        return a.im < b.im;
    }

    /// "a" for real values, otherwise "a + b*i" / "a - b*i" with p/q components.
    std::string str() const {
        if (im.is_zero())
            return re.str();
        std::string s = re.str();
        if (im.sign() < 0)
            return s + " - " + (-im).str() + "*i";
        return s + " + " + im.str() + "*i";
    }
};

} // namespace hydro
