#include "hydro/tensor/bivector.hpp"

#include "hydro/errors.hpp"

#include <algorithm>

namespace hydro {

Ring::Ring(int n_, std::vector<std::string> params_) : n(n_), params(std::move(params_)) {
    if (n < 1)
        throw OutOfRange("ring needs at least one coordinate");
    if (nvars() > kMaxVars)
        throw OutOfRange("too many variables: " + std::to_string(nvars()) + " > " +
                         std::to_string(kMaxVars));
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto& p = params[i];
        if (p.empty() || std::count(params.begin(), params.end(), p) > 1)
            throw ParseError("bad or duplicate parameter name '" + p + "'");
        if (p[0] == 'u' && p.size() > 1 && std::all_of(p.begin() + 1, p.end(), ::isdigit))
            throw ParseError("parameter name '" + p + "' clashes with coordinates");
    }
}

std::vector<std::string> Ring::names() const {
    std::vector<std::string> out;
    for (int k = 1; k <= n; ++k)
        out.push_back("u" + std::to_string(k));
    out.insert(out.end(), params.begin(), params.end());
    return out;
}

MultiPoly Ring::u(int k) const {
    if (k < 1)
        throw OutOfRange("coordinate index " + std::to_string(k));
    if (k > n)
        return zero();
    return MultiPoly::variable(nvars(), k - 1);
}

MultiPoly Ring::param(const std::string& name) const {
    auto it = std::find(params.begin(), params.end(), name);
    if (it == params.end())
        throw OutOfRange("unknown parameter '" + name + "'");
    return MultiPoly::variable(nvars(), n + static_cast<int>(it - params.begin()));
}

Bivector::Bivector(Ring ring, PolyMatrix entries) : ring_(std::move(ring)), m_(std::move(entries)) {
    const auto n = static_cast<std::size_t>(ring_.n);
    if (m_.rows() != n || m_.cols() != n)
        throw DimensionMismatch("bivector of shape " + m_.shape() + " on " + std::to_string(n) +
                                " coordinates");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (m_(i, j).nvars() != ring_.nvars())
                throw DimensionMismatch("bivector entry in a different ring");
            if (j > i && !(m_(i, j) == m_(j, i)))
                throw Error("bivector is not symmetric at (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
        }
}

Bivector Bivector::zero(const Ring& ring) {
    auto n = static_cast<std::size_t>(ring.n);
    return Bivector(ring, zero_poly_matrix(n, n, ring.nvars()));
}

Bivector Bivector::constant(const Ring& ring, const RationalMatrix& m) {
    return Bivector(ring, to_poly_matrix(m, ring.nvars()));
}

bool Bivector::is_zero() const {
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (!m_(i, j).is_zero())
                return false;
    return true;
}

bool Bivector::is_constant() const { return degree() <= 0; }

int Bivector::degree() const {
    int d = -1;
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            d = std::max(d, m_(i, j).degree_in_block(ring_.n));
    return d;
}

Bivector Bivector::homogeneous_part(int k) const {
    return Bivector(ring_, m_.map([&](const MultiPoly& p) { return p.homogeneous_part(ring_.n, k); }));
}

MultiPoly Bivector::determinant() const { return poly_determinant(m_); }

Bivector Bivector::substitute_param(const std::string& name, const Rational& value) const {
    auto it = std::find(ring_.params.begin(), ring_.params.end(), name);
    if (it == ring_.params.end())
        throw OutOfRange("unknown parameter '" + name + "'");
    int var = ring_.n + static_cast<int>(it - ring_.params.begin());
    return Bivector(ring_, m_.map([&](const MultiPoly& p) { return p.substitute(var, value); }));
}

Bivector Bivector::in_ring(const Ring& wider) const {
    if (wider.n != ring_.n || wider.params.size() < ring_.params.size() ||
        !std::equal(ring_.params.begin(), ring_.params.end(), wider.params.begin()))
        throw DimensionMismatch("target ring does not extend the bivector's ring");
    return Bivector(wider, m_.map([&](const MultiPoly& p) { return p.embed(wider.nvars()); }));
}

Bivector& Bivector::operator+=(const Bivector& o) {
    if (!(ring_ == o.ring_))
        throw DimensionMismatch("bivectors on different rings");
    m_ = m_ + o.m_;
    return *this;
}

Bivector& Bivector::operator-=(const Bivector& o) {
    if (!(ring_ == o.ring_))
        throw DimensionMismatch("bivectors on different rings");
    m_ = m_ - o.m_;
    return *this;
}

Bivector& Bivector::operator*=(const MultiPoly& c) {
    m_ = m_.map([&](const MultiPoly& p) { return p * c; });
    return *this;
}

Bivector& Bivector::operator*=(const Rational& c) {
    m_ = m_.map([&](const MultiPoly& p) { return p * c; });
    return *this;
}

std::string Bivector::str() const {
    auto names = ring_.names();
    std::string s = "[";
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m_.cols(); ++j)
            s += (j ? ", " : "") + m_(i, j).str(names);
        s += "]";
    }
    return s + "]";
}

LinearMetric::LinearMetric(Bivector b) : Bivector(std::move(b)) {
    if (degree() > 1)
        throw Error("metric has degree " + std::to_string(degree()) + " in the coordinates");
    if (determinant().is_zero())
        throw IdenticallySingular("metric is degenerate for all values of the variables");
}

LinearMetric::LinearMetric(const Ring& ring, const RationalMatrix& g0)
    : LinearMetric(Bivector::constant(ring, g0)) {}

MultiPoly LinearMetric::coeff(int i, int j, int k) const {
    if (k < 0 || k >= n())
        throw OutOfRange("coordinate index " + std::to_string(k + 1));
    return (*this)(i, j).coefficient(k, 1).homogeneous_part(n(), 0);
}

OperatorSpec::OperatorSpec(Ring r, std::vector<LinearMetric> m, bool red)
    : ring(std::move(r)), metrics(std::move(m)), reducible(red) {
    if (metrics.empty())
        throw DimensionMismatch("operator needs at least one metric");
    for (const auto& g : metrics)
        if (!(g.ring() == ring))
            throw DimensionMismatch("operator metrics live on different rings");
}

RationalMatrix antidiagonal(int n) {
    RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i)
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(n - 1 - i)) = Rational(1);
    return m;
}

} // namespace hydro
