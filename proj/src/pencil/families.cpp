#include "hydro/pencil/families.hpp"

#include "hydro/catalog/mu.hpp"
#include "hydro/errors.hpp"
#include "hydro/exact/groebner.hpp"
#include "hydro/exact/linalg.hpp"
#include "hydro/pencil/killing.hpp"
#include "hydro/tensor/geometry.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace hydro {

namespace {

std::size_t z(int i) { return static_cast<std::size_t>(i); }

using RowKey = std::pair<std::size_t, std::array<std::uint8_t, kMaxVars>>;

/// Sparse linear system: one column per unknown, rows keyed by tensor slot and monomial.
class SparseSystem {
  public:
    explicit SparseSystem(std::size_t cols) : cols_(cols) {}

    void add(std::size_t col, std::size_t group, const Tensor<MultiPoly>& t) {
        for (std::size_t k = 0; k < t.size(); ++k)
            for (const auto& term : t.flat(k).terms())
                add(col, {group * t.size() + k, term.m.e}, term.c);
    }

    void add(std::size_t col, const RowKey& key, const Rational& c) {
        auto [it, fresh] = index_.try_emplace(key, rows_.size());
        if (fresh)
            rows_.emplace_back(cols_, Rational{});
        rows_[it->second][col] += c;
    }

    std::vector<std::vector<Rational>> nullspace() const {
        if (rows_.empty()) {
            std::vector<std::vector<Rational>> id;
            for (std::size_t c = 0; c < cols_; ++c) {
                id.emplace_back(cols_, Rational{});
                id.back()[c] = Rational(1);
            }
            return id;
        }
        return hydro::nullspace(rows_to_matrix(rows_, cols_));
    }

  private:
    std::size_t cols_;
    std::map<RowKey, std::size_t> index_;
    std::vector<std::vector<Rational>> rows_;
};

Bivector combine(const Ring& ring, const std::vector<Bivector>& basis, const std::vector<Rational>& x) {
    Bivector out = Bivector::zero(ring);
    for (std::size_t a = 0; a < basis.size(); ++a)
        if (!x[a].is_zero())
            out += basis[a] * x[a];
    return out;
}

/// Echelon basis of the span, in the coordinates of linear_coordinates.
std::vector<Bivector> canonical_basis(const Ring& ring, const std::vector<Bivector>& span) {
    if (span.empty())
        return {};
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : span)
        rows.push_back(linear_coordinates(b));
    auto m = rows_to_matrix(rows, rows.front().size());
    auto piv = rref(m);
    std::vector<Bivector> out;
    for (std::size_t r = 0; r < piv.size(); ++r) {
        std::vector<Rational> x(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            x[c] = m(r, c);
        out.push_back(from_linear_coordinates(ring, x));
    }
    return out;
}

using QMatrix = Matrix<Rational>;
using Vec = std::vector<Rational>;

/// Gram matrices of the quadratic Nijenhuis terms on span(basis): one
/// matrix per tensor slot and u-monomial, M_ab = N(L_a + L_b) - N(L_a) - N(L_b).
std::vector<QMatrix> quadratic_forms(const Bivector& g, const std::vector<Bivector>& basis) {
    const std::size_t m = basis.size();
    std::vector<PolyMatrix> L;
    std::vector<Tensor<MultiPoly>> N;
    for (const auto& h : basis) {
        L.push_back(affinor(g, h));
        N.push_back(nijenhuis_torsion(L.back()));
    }
    std::map<RowKey, QMatrix> forms;
    auto put = [&](std::size_t a, std::size_t b, const Tensor<MultiPoly>& B) {
        for (std::size_t k = 0; k < B.size(); ++k)
            for (const auto& term : B.flat(k).terms()) {
                auto [it, fresh] = forms.try_emplace({k, term.m.e}, m, m, Rational{});
                it->second(a, b) += term.c;
            }
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a; b < m; ++b) {
            Tensor<MultiPoly> B = N[a];
            if (a == b) {
                for (std::size_t k = 0; k < B.size(); ++k)
                    B.flat(k) *= Rational(2);
            } else {
                Tensor<MultiPoly> s = nijenhuis_torsion(L[a] + L[b]);
                for (std::size_t k = 0; k < B.size(); ++k)
                    B.flat(k) = s.flat(k) - N[a].flat(k) - N[b].flat(k);
                put(b, a, B);
            }
            put(a, b, B);
        }
    std::vector<QMatrix> out;
    for (auto& [key, M] : forms)
        out.push_back(std::move(M));
    return out;
}

/// P^T M P for the columns P (a list of vectors).
QMatrix restrict_form(const QMatrix& M, const std::vector<Vec>& P) {
    const std::size_t r = P.size(), m = M.rows();
    std::vector<Vec> MP(r, Vec(m));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (!M(a, b).is_zero() && !P[j][b].is_zero())
                    MP[j][a] += M(a, b) * P[j][b];
    QMatrix out(r, r, Rational{});
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t a = 0; a < m; ++a)
                if (!P[i][a].is_zero())
                    out(i, j) += P[i][a] * MP[j][a];
    return out;
}

bool is_zero_matrix(const QMatrix& M) {
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!M(i, j).is_zero())
                return false;
    return true;
}

/// Columns of P spanning the kernel of the functionals `rows` (in P-coordinates).
std::vector<Vec> restrict_kernel(const std::vector<Vec>& P, const std::vector<Vec>& rows) {
    std::vector<Vec> out;
    const std::size_t m = P.empty() ? 0 : P.front().size();
    for (const auto& k : hydro::nullspace(rows_to_matrix(rows, P.size()))) {
        Vec v(m);
        for (std::size_t i = 0; i < P.size(); ++i)
            if (!k[i].is_zero())
                for (std::size_t a = 0; a < m; ++a)
                    v[a] += k[i] * P[i][a];
        out.push_back(std::move(v));
    }
    return out;
}

/// Linear factors (a, b) with t^T M t proportional to (a.t)(b.t), if they exist over Q.
std::optional<std::pair<Vec, Vec>> split_form(const QMatrix& M) {
    QMatrix R = M;
    auto piv = rref(R);
    const std::size_t r = M.rows();
    auto row = [&](std::size_t i) {
        Vec v(r);
        for (std::size_t j = 0; j < r; ++j)
            v[j] = R(i, j);
        return v;
    };
    if (piv.size() == 1)
        return std::pair{row(0), row(0)};
    if (piv.size() != 2)
        return std::nullopt;
    const Rational a11 = M(piv[0], piv[0]), a12 = M(piv[0], piv[1]), a22 = M(piv[1], piv[1]);
    Vec x = row(0), y = row(1);
    auto mix = [&](const Rational& p, const Rational& q) {
        Vec v(r);
        for (std::size_t j = 0; j < r; ++j)
            v[j] = x[j] * p + y[j] * q;
        return v;
    };
    if (a11.is_zero())
        return std::pair{y, mix(a12 * Rational(2), a22)};
    Rational s;
    if (!rational_sqrt(a12 * a12 - a11 * a22, s))
        return std::nullopt;
    return std::pair{mix(a11, a12 - s), mix(a11, a12 + s)};
}

/// t^T M t / 2 as a polynomial in the coordinates t.
MultiPoly form_polynomial(const QMatrix& M) {
    const int r = static_cast<int>(M.rows());
    MultiPoly q(r);
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            Rational c = M(z(i), z(j));
            if (c.is_zero())
                continue;
            if (i == j)
                c *= Rational(1, 2);
            q += MultiPoly::monomial(r, Monomial::var(i) * Monomial::var(j), c);
        }
    return q;
}

/// A coordinate t_i dividing some element of the Groebner basis of the forms.
std::optional<std::size_t> variable_factor(const std::vector<QMatrix>& live) {
    const std::size_t r = live.front().rows();
    if (r > z(kMaxVars))
        return std::nullopt;
    std::vector<MultiPoly> gens;
    for (const auto& M : live)
        gens.push_back(form_polynomial(M));
    for (const auto& g : groebner_basis(gens))
        for (std::size_t i = 0; i < r; ++i) {
            bool all = true;
            for (const auto& t : g.terms())
                if (!t.m.e[i]) {
                    all = false;
                    break;
                }
            if (all)
                return i;
        }
    return std::nullopt;
}

/// Splits the common zero set of the forms inside span(P) into linear pieces
/// by peeling off rationally factorable forms. When none factors, a
/// coordinate dividing a Groebner basis element is set to zero; a branch
/// with neither contributes the common radical of its forms. Pieces lying
/// off such a coordinate hyperplane are not followed.
void decompose(const std::vector<QMatrix>& forms, const std::vector<Vec>& P, std::vector<std::vector<Vec>>& out) {
    if (P.empty()) {
        out.push_back(P);
        return;
    }
    std::vector<QMatrix> live;
    for (const auto& M : forms) {
        QMatrix R = restrict_form(M, P);
        if (!is_zero_matrix(R))
            live.push_back(std::move(R));
    }
    if (live.empty()) {
        out.push_back(P);
        return;
    }
    std::optional<std::pair<Vec, Vec>> split;
    for (const auto& M : live) {
        if (rank(M) == 1) {
            split = split_form(M);
            break;
        }
    }
    if (!split)
        for (const auto& M : live)
            if ((split = split_form(M)))
                break;
    if (split) {
        decompose(forms, restrict_kernel(P, {split->first}), out);
        if (split->second != split->first)
            decompose(forms, restrict_kernel(P, {split->second}), out);
        return;
    }
    if (auto i = variable_factor(live)) {
        Vec e(P.size());
        e[*i] = Rational(1);
        decompose(forms, restrict_kernel(P, {e}), out);
    }
    std::vector<Vec> rows;
    for (const auto& M : live)
        for (std::size_t i = 0; i < M.rows(); ++i) {
            Vec v(M.cols());
            for (std::size_t j = 0; j < M.cols(); ++j)
                v[j] = M(i, j);
            rows.push_back(std::move(v));
        }
    out.push_back(restrict_kernel(P, rows));
}

/// Maximal linear pieces of the quadratic Nijenhuis zero set inside
/// span(basis), largest first.
std::vector<std::vector<Bivector>> quadratic_components(const std::vector<QMatrix>& forms, const Bivector& g,
                                                       const std::vector<Bivector>& basis) {
    const std::size_t m = basis.size();
    std::vector<Vec> id(m, Vec(m));
    for (std::size_t i = 0; i < m; ++i)
        id[i][i] = Rational(1);
    std::vector<std::vector<Vec>> pieces;
    decompose(forms, id, pieces);
    std::stable_sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::vector<Vec>> kept;
    for (const auto& p : pieces) {
        bool inside = false;
        for (const auto& k : kept) {
            auto both = k;
            both.insert(both.end(), p.begin(), p.end());
            if (m > 0 && rank(rows_to_matrix(both, m)) == k.size()) {
                inside = true;
                break;
            }
        }
        if (!inside)
            kept.push_back(p);
    }
    std::vector<std::vector<Bivector>> out;
    for (const auto& k : kept) {
        std::vector<Bivector> c;
        for (const auto& x : k)
            c.push_back(combine(g.ring(), basis, x));
        out.push_back(std::move(c));
    }
    return out;
}

/// A - tr(A)/n.
PolyMatrix trace_free(const PolyMatrix& A, const Ring& ring) {
    const std::size_t n = A.rows();
    MultiPoly tr = ring.zero();
    for (std::size_t i = 0; i < n; ++i)
        tr += A(i, i);
    PolyMatrix out = A;
    for (std::size_t i = 0; i < n; ++i)
        out(i, i) -= tr * Rational(1, static_cast<long>(n));
    return out;
}

bool is_zero(const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                return false;
    return true;
}

/// Powers N^0..N^{s-1} of N = L0 - tr(L0)/n when N is nilpotent of index s.
std::optional<std::vector<PolyMatrix>> nilpotent_powers(const PolyMatrix& L0, const Ring& ring) {
    const std::size_t n = L0.rows();
    PolyMatrix N = trace_free(L0, ring);
    PolyMatrix I = zero_poly_matrix(n, n, ring.nvars());
    for (std::size_t i = 0; i < n; ++i)
        I(i, i) = ring.constant(Rational(1));
    std::vector<PolyMatrix> pw{I};
    while (pw.size() <= n) {
        PolyMatrix next = pw.back() * N;
        if (is_zero(next))
            return pw;
        pw.push_back(std::move(next));
    }
    return std::nullopt;
}

SolutionFamily finish(const Bivector& g, const Bivector& g0, const std::vector<Bivector>& linear) {
    SolutionFamily fam;
    fam.g = g;
    fam.g0 = g0;
    fam.linear_dimension = static_cast<int>(linear.size());
    fam.linear_basis = canonical_basis(g.ring(), linear);
    auto forms = quadratic_forms(g, linear);
    auto components = quadratic_components(forms, g, linear);
    if (linear.size() <= z(kMaxVars)) {
        std::vector<MultiPoly> gens;
        for (const auto& M : forms)
            gens.push_back(form_polynomial(M));
        fam.zero_set_dimension = zero_set_dimension(groebner_basis(gens), static_cast<int>(linear.size()));
    }
    for (const auto& c : components)
        fam.component_dimensions.push_back(static_cast<int>(c.size()));
    fam.quadratic_identity = components.size() == 1 && components.front().size() == linear.size();
    fam.basis = canonical_basis(g.ring(), components.front());
    fam.dimension = static_cast<int>(fam.basis.size());
    return fam;
}

} // namespace

Ring SolutionFamily::kappa_ring() const {
    Ring r = g.ring();
    for (int i = 1; i <= dimension; ++i)
        r.params.push_back("kappa" + std::to_string(i));
    return r;
}

Bivector SolutionFamily::general() const {
    Ring r = kappa_ring();
    Bivector out = g0.in_ring(r);
    for (int i = 0; i < dimension; ++i)
        out += basis[z(i)].in_ring(r) * r.param("kappa" + std::to_string(i + 1));
    return out;
}

SolutionFamily solve_linear_conditions(const Bivector& g, const Bivector& g0) {
    if (!(g.ring() == g0.ring()))
        throw DimensionMismatch("metrics on different rings");
    if (!g.is_constant() || !g0.is_constant())
        throw FirstMetricNotConstant("normal form pair must be constant");
    const Ring& ring = g.ring();
    const int n = ring.n;
    // unknown h^{ij}_k for i <= j: the linear slots of linear_coordinates
    std::vector<Bivector> unit;
    const std::size_t pairs = z(n * (n + 1) / 2);
    for (std::size_t c = 0; c < pairs * z(n); ++c) {
        std::vector<Rational> x(pairs * z(n + 1));
        x[c] = Rational(1);
        unit.push_back(from_linear_coordinates(ring, x));
    }
    PolyMatrix L0 = affinor(g, g0);
    // single eigenvalue: (L - tr(L)/n)^s = 0 must persist at first order
    auto powers = nilpotent_powers(L0, ring);
    SparseSystem sys(unit.size());
    for (std::size_t c = 0; c < unit.size(); ++c) {
        sys.add(c, 0, killing_residual(g, unit[c]));
        Tensor<MultiPoly> N = nijenhuis_torsion(L0 + affinor(g, unit[c]));
        for (std::size_t k = 0; k < N.size(); ++k)
            N.flat(k) = N.flat(k).homogeneous_part(n, 0);
        sys.add(c, 1, N);
        if (powers) {
            const std::size_t s = powers->size();
            PolyMatrix A = trace_free(affinor(g, unit[c]), ring);
            Tensor<MultiPoly> first(n, 2, ring.zero());
            for (std::size_t j = 0; j < s; ++j) {
                PolyMatrix t = (*powers)[j] * A * (*powers)[s - 1 - j];
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        first(a, b) += t(z(a), z(b));
            }
            sys.add(c, 2, first);
        }
    }
    std::vector<Bivector> linear;
    for (const auto& x : sys.nullspace())
        linear.push_back(combine(ring, unit, x));
    return finish(g, g0, linear);
}

SolutionFamily solve_jordan_family(int n) {
    if (n < 2)
        throw OutOfRange("Jordan block of size " + std::to_string(n));
    // c^i_{jk} with 1-based indices; out of range means zero
    auto col = [n](int i, int j, int k) -> std::optional<std::size_t> {
        if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
            return std::nullopt;
        return z(((i - 1) * n + (j - 1)) * n + (k - 1));
    };
    const std::size_t cols = z(n * n * n);
    std::vector<std::vector<Rational>> rows;
    auto equation = [&](std::initializer_list<std::pair<std::optional<std::size_t>, long>> terms) {
        std::vector<Rational> row(cols);
        bool any = false;
        for (const auto& [c, s] : terms)
            if (c) {
                row[*c] += Rational(s);
                any = true;
            }
        if (any)
            rows.push_back(std::move(row));
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                // Nijenhuis, terms linear in c
                equation({{col(k, j, i - 1), 1}, {col(k, i, j - 1), -1}, {col(k + 1, i, j), 1},
                          {col(k + 1, j, i), -1}});
                // symmetry of g~
                equation({{col(n + 1 - i, j, k), 1}, {col(n + 1 - j, i, k), -1}});
                // Killing
                equation({{col(n + 1 - i, j, k), 1}, {col(n + 1 - k, i, j), 1}, {col(n + 1 - j, k, i), 1}});
            }
    Ring ring(n, {"lambda"});
    Bivector g = Bivector::constant(ring, antidiagonal(z(n)));
    Bivector g0 = jordan_constant_part(ring, ring.param("lambda"));
    std::vector<Bivector> linear;
    for (const auto& x : hydro::nullspace(rows_to_matrix(rows, cols))) {
        auto m = zero_poly_matrix(z(n), z(n), ring.nvars());
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    m(z(i - 1), z(j - 1)) += ring.u(k) * x[*col(i, n + 1 - j, k)];
        linear.emplace_back(ring, std::move(m));
    }
    return finish(g, g0, linear);
}

ComplexBivector ComplexBivector::zero(int m) {
    ComplexBivector b;
    b.m = m;
    b.coeffs.assign(z(m), std::vector<std::vector<GaussianRational>>(z(m), std::vector<GaussianRational>(z(m + 1))));
    return b;
}

Bivector complexify(const ComplexBivector& h) {
    const int m = h.m;
    Ring ring(2 * m);
    auto out = zero_poly_matrix(z(2 * m), z(2 * m), ring.nvars());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto& c = h.coeffs[z(i)][z(j)];
            if (!(h.coeffs[z(j)][z(i)] == c))
                throw Error("complex bivector is not symmetric");
            MultiPoly a = ring.constant(c[0].re), b = ring.constant(c[0].im);
            for (int k = 1; k <= m; ++k) {
                const auto& al = c[z(k)];
                MultiPoly x = ring.u(2 * k - 1), y = ring.u(2 * k);
                a += x * al.re - y * al.im;
                b += x * al.im + y * al.re;
            }
            out(z(2 * i), z(2 * j)) = -b;
            out(z(2 * i), z(2 * j + 1)) = a;
            out(z(2 * i + 1), z(2 * j)) = a;
            out(z(2 * i + 1), z(2 * j + 1)) = b;
        }
    return Bivector(ring, std::move(out));
}

OperatorSpec complexify(const ComplexBivector& g, const ComplexBivector& h) {
    if (g.m != h.m)
        throw DimensionMismatch("complex metrics of different size");
    Bivector rg = complexify(g), rh = complexify(h);
    return OperatorSpec(rg.ring(), {LinearMetric(rg), LinearMetric(rh)});
}

} // namespace hydro
