#pragma once

// Scalar backends for identities whose entries are rational functions.
//
// Frac:  numerator over a power of one shared denominator D (the product of
//        the determinants of every inverted metric). Zero test is a numerator
//        test, so no gcd is ever needed.
// Jet:   value, gradient and Hessian in the coordinates at a fixed rational
//        point. Differentiation lowers the order by one.

#include "hydro/errors.hpp"
#include "hydro/exact/poly_matrix.hpp"
#include "hydro/exact/rational_function.hpp"
#include "hydro/tensor/bivector.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace hydro::detail {

struct Den {
    MultiPoly d;
    std::vector<MultiPoly> grad;
    std::vector<MultiPoly> pw;

    Den(MultiPoly d_, int n) : d(std::move(d_)) {
        for (int k = 0; k < n; ++k)
            grad.push_back(d.diff(k));
        pw.push_back(MultiPoly(d.nvars(), Rational(1)));
    }
    const MultiPoly& pow(int e) {
        while (static_cast<int>(pw.size()) <= e)
            pw.push_back(pw.back() * d);
        return pw[static_cast<std::size_t>(e)];
    }
};

class Frac {
  public:
    Frac() = default;
    Frac(MultiPoly num, int e, std::shared_ptr<Den> den) : num_(std::move(num)), e_(e), den_(std::move(den)) {}

    const MultiPoly& num() const { return num_; }
    int exponent() const { return e_; }
    bool is_zero() const { return num_.is_zero(); }

    Frac& operator+=(const Frac& o) {
        if (o.is_zero())
            return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        adopt(o);
        if (e_ == o.e_) {
            num_ += o.num_;
        } else if (e_ < o.e_) {
            num_ = num_ * den_->pow(o.e_ - e_) + o.num_;
            e_ = o.e_;
        } else {
            num_ += o.num_ * den_->pow(e_ - o.e_);
        }
        if (num_.is_zero())
            e_ = 0;
        return *this;
    }
    Frac& operator-=(const Frac& o) { return *this += -o; }
    Frac operator-() const { return Frac(-num_, e_, den_); }
    friend Frac operator+(Frac a, const Frac& b) { return a += b; }
    friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
    friend Frac operator*(const Frac& a, const Frac& b) {
        if (a.is_zero() || b.is_zero())
            return Frac(MultiPoly(a.num_.nvars()), 0, a.den_ ? a.den_ : b.den_);
        return Frac(a.num_ * b.num_, a.e_ + b.e_, a.den_ ? a.den_ : b.den_);
    }
    friend Frac operator*(Frac a, const Rational& c) {
        a.num_ *= c;
        if (a.num_.is_zero())
            a.e_ = 0;
        return a;
    }

    Frac diff(int k) const {
        if (is_zero())
            return *this;
        if (e_ == 0)
            return Frac(num_.diff(k), 0, den_);
        MultiPoly top = num_.diff(k) * den_->d - num_ * den_->grad[static_cast<std::size_t>(k)] * Rational(e_);
        Frac r(std::move(top), e_ + 1, den_);
        r.reduce();
        return r;
    }

    /// Cancels powers of D that divide the numerator.
    void reduce() {
        while (e_ > 0 && !num_.is_zero()) {
            auto q = num_.divide_exact(den_->d);
            if (!q)
                break;
            num_ = std::move(*q);
            --e_;
        }
        if (num_.is_zero())
            e_ = 0;
    }

    RationalFunction to_rational_function() const {
        if (e_ == 0)
            return RationalFunction(num_);
        ScopedGcdCap cap(20000);
        return RationalFunction(num_, den_->pow(e_));
    }

  private:
    void adopt(const Frac& o) {
        if (!den_)
            den_ = o.den_;
    }
    MultiPoly num_;
    int e_ = 0;
    std::shared_ptr<Den> den_;
};

class Jet {
  public:
    Jet() = default;
    Jet(int n, int order) : n_(n), order_(order) {
        if (order >= 1)
            g_.assign(static_cast<std::size_t>(n), Rational(0));
        if (order >= 2)
            h_.assign(static_cast<std::size_t>(n * n), Rational(0));
    }

    static Jet of(const MultiPoly& p, std::span<const Rational> point, int n, int order = 2) {
        Jet j(n, order);
        j.v_ = p.eval(point);
        j.constant_ = p.degree_in_block(n) <= 0;
        if (order >= 1 && !j.constant_)
            for (int a = 0; a < n; ++a) {
                MultiPoly da = p.diff(a);
                if (da.is_zero())
                    continue;
                j.g_[static_cast<std::size_t>(a)] = da.eval(point);
                if (order >= 2)
                    for (int b = a; b < n; ++b) {
                        MultiPoly dab = da.diff(b);
                        if (dab.is_zero())
                            continue;
                        Rational x = dab.eval(point);
                        j.h_[static_cast<std::size_t>(a * n + b)] = x;
                        j.h_[static_cast<std::size_t>(b * n + a)] = x;
                    }
            }
        return j;
    }

    const Rational& value() const { return v_; }
    int order() const { return order_; }
    bool is_zero() const {
        if (!v_.is_zero())
            return false;
        for (const auto& x : g_)
            if (!x.is_zero())
                return false;
        for (const auto& x : h_)
            if (!x.is_zero())
                return false;
        return true;
    }
    /// Only the value enters identity tests; derivatives are intermediate data.
    bool value_zero() const { return v_.is_zero(); }

    Jet& operator+=(const Jet& o) { return combine(o, Rational(1)); }
    Jet& operator-=(const Jet& o) { return combine(o, Rational(-1)); }
    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    Jet operator-() const { return *this * Rational(-1); }
    friend Jet operator*(Jet a, const Rational& c) {
        a.v_ *= c;
        if (a.constant_)
            return a;
        for (auto& x : a.g_)
            x *= c;
        for (auto& x : a.h_)
            x *= c;
        return a;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        if (a.constant_)
            return b * a.v_;
        if (b.constant_)
            return a * b.v_;
        int ord = std::min(a.order_, b.order_);
        Jet r(a.n_, ord);
        r.constant_ = false;
        r.v_ = a.v_ * b.v_;
        const auto n = static_cast<std::size_t>(a.n_);
        if (ord >= 1)
            for (std::size_t k = 0; k < n; ++k)
                r.g_[k] = a.v_ * b.g_[k] + b.v_ * a.g_[k];
        if (ord >= 2)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    r.h_[k * n + l] = a.v_ * b.h_[k * n + l] + b.v_ * a.h_[k * n + l] +
                                      a.g_[k] * b.g_[l] + a.g_[l] * b.g_[k];
        return r;
    }
    Jet inverse() const {
        if (v_.is_zero())
            throw ArithmeticError("jet inverse at a zero value");
        Jet r(n_, order_);
        r.v_ = v_.inverse();
        if (constant_) {
            r.constant_ = true;
            return r;
        }
        r.constant_ = false;
        const auto n = static_cast<std::size_t>(n_);
        Rational m = -(r.v_ * r.v_);
        if (order_ >= 1)
            for (std::size_t k = 0; k < n; ++k)
                r.g_[k] = m * g_[k];
        if (order_ >= 2) {
            Rational c = Rational(2) * r.v_ * r.v_ * r.v_;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    r.h_[k * n + l] = m * h_[k * n + l] + c * g_[k] * g_[l];
        }
        return r;
    }

    Jet diff(int k) const {
        if (order_ < 1)
            throw Error("internal: differentiating a jet beyond its order");
        Jet r(n_, order_ - 1);
        if (constant_)
            return r;
        r.constant_ = false;
        const auto n = static_cast<std::size_t>(n_);
        const auto kk = static_cast<std::size_t>(k);
        r.v_ = g_[kk];
        if (order_ >= 2)
            for (std::size_t l = 0; l < n; ++l)
                r.g_[l] = h_[kk * n + l];
        return r;
    }

    void reduce() {}

  private:
    Jet& combine(const Jet& o, const Rational& s) {
        if (o.order_ < order_) {
            order_ = o.order_;
            if (order_ < 2)
                h_.clear();
            if (order_ < 1)
                g_.clear();
        }
        v_ += s * o.v_;
        if (o.constant_)
            return *this;
        constant_ = false;
        for (std::size_t k = 0; k < g_.size(); ++k)
            g_[k] += s * o.g_[k];
        for (std::size_t k = 0; k < h_.size(); ++k)
            h_[k] += s * o.h_[k];
        return *this;
    }
    int n_ = 0;
    int order_ = 0;
    Rational v_;
    /// All derivatives are zero; lets products skip the jet rule.
    bool constant_ = true;
    std::vector<Rational> g_, h_;
};

/// Residual test used by identity checks: exact zero for fractions, zero
/// value for jets.
inline bool vanishes(const Frac& f) { return f.is_zero(); }
inline bool vanishes(const Jet& j) { return j.value_zero(); }

/// Symbolic backend. Every matrix that needs inverting is registered up front
/// so that a single common denominator can be formed.
class SymbolicEngine {
  public:
    using Scalar = Frac;
    static constexpr bool sampled = false;

    SymbolicEngine(const Ring& ring, const std::vector<PolyMatrix>& to_invert) : ring_(ring) {
        std::vector<MultiPoly> dets;
        MultiPoly d(ring.nvars(), Rational(1));
        for (const auto& m : to_invert) {
            MultiPoly det = poly_determinant(m);
            if (det.is_zero())
                throw IdenticallySingular("metric is degenerate for all values of the variables");
            dets.push_back(det);
            if (!det.is_constant())
                d *= det;
        }
        if (!d.is_constant())
            den_ = std::make_shared<Den>(d, ring.n);
        for (std::size_t idx = 0; idx < to_invert.size(); ++idx) {
            PolyMatrix adj = poly_adjugate(to_invert[idx]);
            const MultiPoly& det = dets[idx];
            if (det.is_constant()) {
                Rational inv = det.constant_term().inverse();
                inverses_.push_back(adj.map([&](const MultiPoly& a) { return lift(a * inv); }));
                continue;
            }
            MultiPoly others(ring.nvars(), Rational(1));
            for (std::size_t j = 0; j < dets.size(); ++j)
                if (j != idx && !dets[j].is_constant())
                    others *= dets[j];
            inverses_.push_back(adj.map([&](const MultiPoly& a) { return Frac(a * others, 1, den_); }));
        }
    }

    const Ring& ring() const { return ring_; }
    Frac lift(const MultiPoly& p) const { return Frac(p, 0, den_); }
    Frac zero() const { return Frac(MultiPoly(ring_.nvars()), 0, den_); }
    const Matrix<Frac>& inverse(std::size_t idx) const { return inverses_.at(idx); }

    std::string describe(const Frac& f) const { return f.to_rational_function().str(ring_.names()); }

  private:
    Ring ring_;
    std::shared_ptr<Den> den_;
    std::vector<Matrix<Frac>> inverses_;
};

/// Jet backend at one sample point (coordinates and parameter values).
class SampledEngine {
  public:
    using Scalar = Jet;
    static constexpr bool sampled = true;

    SampledEngine(const Ring& ring, const std::vector<PolyMatrix>& to_invert, std::vector<Rational> point)
        : ring_(ring), point_(std::move(point)) {
        for (const auto& m : to_invert)
            inverses_.push_back(invert(m));
    }

    const Ring& ring() const { return ring_; }
    Jet lift(const MultiPoly& p) const { return Jet::of(p, point_, ring_.n); }
    Jet zero() const { return Jet(ring_.n, 2); }
    const Matrix<Jet>& inverse(std::size_t idx) const { return inverses_.at(idx); }
    const std::vector<Rational>& point() const { return point_; }

    std::string describe(const Jet& j) const {
        std::string s = j.value().str() + " at (";
        auto names = ring_.names();
        for (std::size_t k = 0; k < point_.size(); ++k)
            s += (k ? ", " : "") + names[k] + "=" + point_[k].str();
        return s + ")";
    }

  private:
    Matrix<Jet> invert(const PolyMatrix& m) const {
        const std::size_t n = m.rows();
        Matrix<Jet> a(n, 2 * n, zero());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = lift(m(i, j));
            a(i, n + i) = lift(MultiPoly(ring_.nvars(), Rational(1)));
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t p = c;
            while (p < n && a(p, c).value_zero())
                ++p;
            if (p == n)
                throw ArithmeticError("metric singular at sample point");
            if (p != c)
                for (std::size_t j = 0; j < 2 * n; ++j)
                    std::swap(a(p, j), a(c, j));
            Jet inv = a(c, c).inverse();
            for (std::size_t j = 0; j < 2 * n; ++j)
                a(c, j) = a(c, j) * inv;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || a(i, c).is_zero())
                    continue;
                Jet f = a(i, c);
                for (std::size_t j = 0; j < 2 * n; ++j)
                    a(i, j) = a(i, j) - f * a(c, j);
            }
        }
        Matrix<Jet> out(n, n, zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) = a(i, n + j);
        return out;
    }

    Ring ring_;
    std::vector<Rational> point_;
    std::vector<Matrix<Jet>> inverses_;
};

/// Deterministic sample points with integer coordinates in [-10^6, 10^6].
class PointSampler {
  public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
    std::vector<Rational> next(int nvars) {
        std::vector<Rational> p;
        for (int k = 0; k < nvars; ++k)
            p.emplace_back(static_cast<long>(rng_() % 2000001ULL) - 1000000L);
        return p;
    }

  private:
    std::mt19937_64 rng_;
};

/// Runs `body(engine)` on the symbolic backend, or on `samples` accepted
/// sample points. A point is rejected when a registered matrix is singular
/// there; more than 100 rejections raise DegenerateEverywhere.
template <class Body>
void with_engines(const Ring& ring, const std::vector<PolyMatrix>& to_invert, bool sampled,
                  std::uint64_t seed, int samples, Body&& body) {
    if (!sampled) {
        SymbolicEngine e(ring, to_invert);
        body(e);
        return;
    }
    std::vector<MultiPoly> dets;
    for (const auto& m : to_invert) {
        dets.push_back(poly_determinant(m));
        if (dets.back().is_zero())
            throw IdenticallySingular("metric is degenerate for all values of the variables");
    }
    PointSampler sampler(seed);
    int rejected = 0;
    for (int accepted = 0; accepted < samples;) {
        auto p = sampler.next(ring.nvars());
        bool ok = true;
        for (const auto& d : dets)
            if (d.eval(p).is_zero())
                ok = false;
        if (!ok) {
            if (++rejected > 100)
                throw DegenerateEverywhere("no admissible sample point after 100 rejections");
            continue;
        }
        SampledEngine e(ring, to_invert, std::move(p));
        body(e);
        ++accepted;
    }
}

} // namespace hydro::detail
