#pragma once

#include "hydro/exact/poly_matrix.hpp"

#include <string>
#include <vector>

namespace hydro {

/// Polynomial ring Q[u1..un, p1..pm]: n coordinates followed by formal parameters.
/// Derivatives only ever act on the coordinates.
struct Ring {
    int n = 0;
    std::vector<std::string> params;

    Ring() = default;
    explicit Ring(int n_, std::vector<std::string> params_ = {});

    int nvars() const { return n + static_cast<int>(params.size()); }
    std::vector<std::string> names() const;
    MultiPoly zero() const { return MultiPoly(nvars()); }
    MultiPoly constant(const Rational& c) const { return MultiPoly(nvars(), c); }
    /// u^k for 1 <= k <= n; zero for k > n.
    MultiPoly u(int k) const;
    /// The formal parameter with this name.
    MultiPoly param(const std::string& name) const;

    friend bool operator==(const Ring&, const Ring&) = default;
};

/// Symmetric contravariant 2-tensor with polynomial entries.
class Bivector {
  public:
    Bivector() = default;
    Bivector(Ring ring, PolyMatrix entries);
    static Bivector zero(const Ring& ring);
    static Bivector constant(const Ring& ring, const RationalMatrix& m);

    const Ring& ring() const { return ring_; }
    int n() const { return ring_.n; }
    const PolyMatrix& matrix() const { return m_; }
    const MultiPoly& operator()(int i, int j) const {
        return m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }

    bool is_zero() const;
    /// No dependence on the coordinates (parameters allowed).
    bool is_constant() const;
    /// Highest total degree in the coordinates, -1 for the zero bivector.
    int degree() const;
    /// Part of coordinate degree exactly k.
    Bivector homogeneous_part(int k) const;
    MultiPoly determinant() const;
    Bivector substitute_param(const std::string& name, const Rational& value) const;
    /// The same entries in a ring with the same coordinates and extra trailing parameters.
    Bivector in_ring(const Ring& wider) const;

    Bivector& operator+=(const Bivector& o);
    Bivector& operator-=(const Bivector& o);
    Bivector& operator*=(const MultiPoly& c);
    Bivector& operator*=(const Rational& c);
    friend Bivector operator+(Bivector a, const Bivector& b) { return a += b; }
    friend Bivector operator-(Bivector a, const Bivector& b) { return a -= b; }
    friend Bivector operator*(Bivector a, const MultiPoly& c) { return a *= c; }
    friend Bivector operator*(const MultiPoly& c, Bivector a) { return a *= c; }
    friend Bivector operator*(Bivector a, const Rational& c) { return a *= c; }
    friend Bivector operator*(const Rational& c, Bivector a) { return a *= c; }
    friend bool operator==(const Bivector& a, const Bivector& b) {
        return a.ring_ == b.ring_ && a.m_ == b.m_;
    }

    std::string str() const;

  private:
    Ring ring_;
    PolyMatrix m_;
};

/// Non-degenerate bivector of degree <= 1 in the coordinates:
/// g^{ij} = c^{ij}_k u^k + g0^{ij}, where c and g0 may depend on parameters.
class LinearMetric : public Bivector {
  public:
    LinearMetric() = default;
    /// Throws Error when b has degree > 1 and IdenticallySingular when det b == 0.
    explicit LinearMetric(Bivector b);
    LinearMetric(const Ring& ring, const RationalMatrix& g0);

    /// c^{ij}_k (0-based k), a polynomial in the parameters.
    MultiPoly coeff(int i, int j, int k) const;
    Bivector constant_part() const { return homogeneous_part(0); }
    Bivector linear_part() const { return homogeneous_part(1); }
};

/// A d-dimensional operator of hydrodynamic type given by one metric per
/// independent variable, all on the same ring.
struct OperatorSpec {
    Ring ring;
    std::vector<LinearMetric> metrics;
    bool reducible = false;

    OperatorSpec() = default;
    OperatorSpec(Ring r, std::vector<LinearMetric> m, bool red = false);
    int n() const { return ring.n; }
    int d() const { return static_cast<int>(metrics.size()); }
};

/// The n x n matrix with ones on the antidiagonal.
RationalMatrix antidiagonal(int n);

} // namespace hydro
