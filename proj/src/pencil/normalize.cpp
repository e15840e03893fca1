#include "hydro/pencil/normalize.hpp"

#include "hydro/catalog/mu.hpp"
#include "hydro/errors.hpp"

namespace hydro {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

void check_coeffs(const JordanFamilyCoeffs& c) {
    if (c.n < 2)
        throw OutOfRange("Jordan family needs n >= 2, got " + std::to_string(c.n));
    if (c.xi.size() != z(c.n - 1))
        throw DimensionMismatch("expected " + std::to_string(c.n - 1) + " coefficients, got " +
                                std::to_string(c.xi.size()));
}

NormalizedFamily normalize_from(const JordanFamilyCoeffs& c, int alpha) {
    const int n = c.n;
    NormalizedFamily out;
    out.alpha = alpha;
    out.coeffs = c;
    auto& xi = out.coeffs.xi;
    for (int k = 1; alpha + k <= n - 2; ++k) {
        FlowStep step{k, Rational(0), false};
        long p = flow_weight(n, k, alpha);
        if (p == 0) {
            step.skipped = true;
            out.moduli.push_back(alpha + k);
        } else {
            // only the alpha term reaches mu^{(alpha+k)} after one application
            step.t = -xi[z(alpha + k)] / Rational(p);
            if (!step.t.is_zero())
                xi = apply_flow(n, k, step.t, xi);
        }
        out.transcript.push_back(step);
    }
    return out;
}

} // namespace

Bivector JordanFamilyCoeffs::linear_part() const {
    check_coeffs(*this);
    Ring ring(n);
    Bivector out = Bivector::zero(ring);
    for (int m = 0; m <= n - 2; ++m)
        if (!xi[z(m)].is_zero())
            out += mu_bivector(ring, m) * xi[z(m)];
    return out;
}

Bivector JordanFamilyCoeffs::bivector() const {
    Ring ring(n);
    return linear_part() + jordan_constant_part(ring, ring.constant(lambda));
}

VectorField jordan_flow_field(const Ring& ring, int k) {
    const int n = ring.n;
    if (k < 1 || k > n - 1)
        throw OutOfRange("flow index " + std::to_string(k) + " for n = " + std::to_string(n));
    VectorField X(z(n), ring.zero());
    for (int i = 1; i <= n - k; ++i)
        X[z(i - 1)] = ring.u(i + k) * Rational(n - k + 1 - 2 * i);
    return X;
}

long flow_weight(int n, int k, int alpha) { return 3L * k + 1 - n - 2L * alpha; }

std::vector<Rational> apply_flow(int n, int k, const Rational& t, const std::vector<Rational>& xi) {
    if (xi.size() != z(n - 1))
        throw DimensionMismatch("coefficient vector of length " + std::to_string(xi.size()));
    std::vector<Rational> out(xi.size());
    for (int a = 0; a <= n - 2; ++a) {
        if (xi[z(a)].is_zero())
            continue;
        // Lie^m mu^{(a)} = prod_{s<m} (p - 2ks) mu^{(a+mk)}
        const long p = flow_weight(n, k, a);
        Rational term = xi[z(a)];
        for (int m = 0; a + m * k <= n - 2; ++m) {
            out[z(a + m * k)] += term;
            term = term * t * Rational(p - 2L * k * m) / Rational(m + 1);
            if (term.is_zero())
                break;
        }
    }
    return out;
}

NormalizedFamily lie_flow_normalize(const JordanFamilyCoeffs& c) {
    check_coeffs(c);
    if (!c.xi[0].is_one())
        throw ScalingNotNormalized("leading coefficient must be 1, got " + c.xi[0].str());
    return normalize_from(c, 0);
}

NormalizedFamily lie_flow_normalize_constant_eig(const JordanFamilyCoeffs& c) {
    check_coeffs(c);
    int alpha = 0;
    while (alpha < c.n - 1 && c.xi[z(alpha)].is_zero())
        ++alpha;
    if (alpha == c.n - 1)
        throw ScalingNotNormalized("all coefficients vanish");
    if (!c.xi[z(alpha)].is_one())
        throw ScalingNotNormalized("leading coefficient must be 1, got " + c.xi[z(alpha)].str());
    return normalize_from(c, alpha);
}

Rational scaling_action(int n, int k, const Rational& gamma) {
    if (gamma.is_zero())
        throw ArithmeticError("scaling by zero");
    if (n % 2 == 1)
        return gamma.pow((n - 1) / 2 + k);
    Rational root;
    if (!rational_sqrt(gamma, root))
        throw NonSquareGamma(gamma.str() + " is not the square of a rational");
    return root.pow(n - 1 + 2 * k);
}

} // namespace hydro
