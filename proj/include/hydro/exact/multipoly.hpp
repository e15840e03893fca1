#pragma once

#include "hydro/exact/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hydro {

/// Upper bound on the number of polynomial variables (coordinates plus formal parameters).
inline constexpr int kMaxVars = 16;

/// Exponent vector; slot 0 is the exponent of u1. Unused slots stay zero.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t deg = 0;

    static Monomial var(int i, unsigned power = 1);

    bool is_one() const { return deg == 0; }
    bool divides(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    /// Requires divides(o).
    Monomial operator/(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    /// Graded lexicographic order with u1 > u2 > ... .
    friend bool grlex_less(const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg)
            return a.deg < b.deg;
        return a.e < b.e;
    }
    std::size_t hash() const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
    Monomial m;
    Rational c;
};

/// Sparse multivariate polynomial over Q in `nvars` variables. Terms are kept
/// in strictly decreasing graded-lex order with no zero coefficients.
///
/// Member functions index variables from 0; the text form names them u1..un.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars);
    MultiPoly(int nvars, const Rational& c);

    static MultiPoly constant(int nvars, const Rational& c) { return MultiPoly(nvars, c); }
    /// The coordinate function of variable i (0-based).
    static MultiPoly variable(int nvars, int i);
    static MultiPoly monomial(int nvars, const Monomial& m, const Rational& c);
    /// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
    static MultiPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    const Term& leading() const { return terms_.front(); }

    int total_degree() const { return terms_.empty() ? -1 : terms_.front().m.deg; }
    int degree_in(int var) const;
    /// Highest total degree in the first `count` variables.
    int degree_in_block(int count) const;
    bool depends_on(int var) const { return degree_in(var) > 0; }

    MultiPoly diff(int var) const;
    Rational eval(std::span<const Rational> point) const;
    /// Substitutes variable `var` by `value`.
    MultiPoly substitute(int var, const MultiPoly& value) const;
    /// Substitutes variable `var` by a rational constant.
    MultiPoly substitute(int var, const Rational& value) const;
    /// Coefficient of u_var^power, as a polynomial in the remaining variables.
    MultiPoly coefficient(int var, int power) const;
    /// Part of total degree `deg` in the first `count` variables (other variables act as scalars).
    MultiPoly homogeneous_part(int count, int deg) const;
    /// Re-embeds into a ring with `nvars` variables; variable i maps to i + offset.
    MultiPoly embed(int nvars, int offset = 0) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    MultiPoly operator-() const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Exact quotient a / b if b divides a, otherwise nullopt.
    std::optional<MultiPoly> divide_exact(const MultiPoly& b) const;
    /// Divides all coefficients by the leading coefficient.
    MultiPoly monic() const;
    /// Positive rational c with this = c * (integer polynomial with coprime coefficients
    /// and positive leading coefficient) times the sign of the leading coefficient.
    Rational content() const;

    /// Canonical text: graded-lex order, coefficients as p/q, e.g. "-4/1*u1 + 3/1".
    std::string str() const;
    std::string str(std::span<const std::string> names) const;
    std::size_t hash() const;

  private:
    void check_same(const MultiPoly& o) const;
    int nvars_ = 0;
    std::vector<Term> terms_;
};

/// Formal partial derivative with respect to u^k, 1 <= k <= nvars.
MultiPoly partial_derivative(const MultiPoly& p, int k);

/// Evaluation at a point of length nvars.
Rational eval_at(const MultiPoly& p, std::span<const Rational> point);

enum class PolyOp { Add, Sub, Mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

/// Greatest common divisor, normalized to leading coefficient 1 (0 if both are 0).
/// Throws GcdLimitExceeded when an intermediate result exceeds the active term cap.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

class GcdLimitExceeded : public std::exception {
  public:
    const char* what() const noexcept override { return "gcd term cap exceeded"; }
};

/// Term-count cap for gcd computations on the current thread (default 100000).
std::size_t gcd_term_cap();
void set_gcd_term_cap(std::size_t cap);

/// Restores the previous cap on scope exit.
class ScopedGcdCap {
  public:
    explicit ScopedGcdCap(std::size_t cap) : prev_(gcd_term_cap()) { set_gcd_term_cap(cap); }
    ~ScopedGcdCap() { set_gcd_term_cap(prev_); }
    ScopedGcdCap(const ScopedGcdCap&) = delete;
    ScopedGcdCap& operator=(const ScopedGcdCap&) = delete;

  private:
    std::size_t prev_;
};

} // namespace hydro
