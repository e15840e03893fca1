#include "hydro/pencil/segre.hpp"

#include "hydro/errors.hpp"
#include "hydro/exact/linalg.hpp"
#include "hydro/exact/roots.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <tuple>

namespace hydro {

namespace {

template <class F>
std::vector<int> block_sizes(const Matrix<F>& L, const F& lambda, int mult) {
    const std::size_t n = L.rows();
    Matrix<F> A = L;
    for (std::size_t i = 0; i < n; ++i)
        A(i, i) = A(i, i) - lambda;
    // ranks r_0 = n, r_k = rank(A^k) until the generalized eigenspace is exhausted
    std::vector<long> r{static_cast<long>(n)};
    Matrix<F> P = A;
    const long target = static_cast<long>(n) - mult;
    while (r.back() > target) {
        r.push_back(static_cast<long>(rank(P)));
        if (r.size() > n + 1)
            throw Error("internal: rank sequence did not stabilize");
        P = P * A;
    }
    // at least k: r_{k-1} - r_k
    std::vector<int> blocks;
    for (std::size_t k = 1; k < r.size(); ++k) {
        long atleast = r[k - 1] - r[k];
        long next = k + 1 < r.size() ? r[k] - r[k + 1] : 0;
        for (long c = 0; c < atleast - next; ++c)
            blocks.push_back(static_cast<int>(k));
    }
    std::sort(blocks.rbegin(), blocks.rend());
    return blocks;
}

RootResult spectrum(const RationalMatrix& L) {
    RootResult roots = rational_roots(char_poly(L));
    if (roots.residual.size() > 1)
        throw UnsupportedEigenvalueField("characteristic polynomial has a factor of degree " +
                                         std::to_string(roots.residual.size() - 1) +
                                         " without roots in Q(i)");
    return roots;
}

std::vector<GaussianRational> eigenvalues_at(const PolyMatrix& L, const std::vector<Rational>& p) {
    auto roots = spectrum(eval_matrix(L, p));
    std::vector<GaussianRational> out;
    for (auto& [v, m] : roots.rational)
        out.emplace_back(v);
    for (auto& [v, m] : roots.gaussian)
        out.push_back(v);
    return out;
}

std::string group_str(const EigenBlocks& e) {
    std::string s;
    for (std::size_t i = 0; i < e.blocks.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(e.blocks[i]);
        if (!e.value.is_real())
            s += "c";
    }
    return s;
}

} // namespace

std::vector<EigenBlocks> jordan_structure(const RationalMatrix& L) {
    if (!L.square())
        throw DimensionMismatch("Jordan structure of " + L.shape() + " matrix");
    auto roots = spectrum(L);
    std::vector<EigenBlocks> out;
    for (auto& [v, m] : roots.rational)
        out.push_back({GaussianRational(v), block_sizes(L, v, m)});
    if (!roots.gaussian.empty()) {
        Matrix<GaussianRational> Lc = L.map([](const Rational& x) { return GaussianRational(x); });
        for (auto& [v, m] : roots.gaussian)
            out.push_back({v, block_sizes(Lc, v, m)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    return out;
}

std::string segre_label(const std::vector<EigenBlocks>& eig) {
    std::vector<std::pair<std::vector<int>, std::string>> groups;
    for (const auto& e : eig)
        groups.emplace_back(e.blocks, group_str(e));
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    std::string s = "[";
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (i)
            s += " | ";
        s += groups[i].second;
    }
    return s + "]";
}

std::string EigenvalueFit::str(const Ring& ring) const {
    auto names = ring.names();
    if (im.is_zero())
        return re.str(names);
    return re.str(names) + " +- i*(" + im.str(names) + ")";
}

std::vector<std::vector<Rational>> sample_points(const Ring& ring, std::uint64_t seed, int count, long range) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(-range, range);
    std::vector<std::vector<Rational>> pts;
    for (int c = 0; c < count; ++c) {
        std::vector<Rational> p;
        for (int v = 0; v < ring.nvars(); ++v)
            p.emplace_back(dist(rng));
        pts.push_back(std::move(p));
    }
    return pts;
}

std::optional<std::vector<EigenvalueFit>> fit_eigenvalues(const PolyMatrix& L, const Ring& ring,
                                                          const std::vector<Rational>& base) {
    const int nv = ring.nvars();
    const auto n = L.rows();
    auto base_eigen = jordan_structure(eval_matrix(L, base));
    // eigenvalues one and two unit steps along each variable
    std::vector<std::vector<GaussianRational>> step1, step2;
    for (int v = 0; v < nv; ++v) {
        auto p1 = base, p2 = base;
        p1[static_cast<std::size_t>(v)] += Rational(1);
        p2[static_cast<std::size_t>(v)] += Rational(2);
        step1.push_back(eigenvalues_at(L, p1));
        step2.push_back(eigenvalues_at(L, p2));
    }
    std::vector<EigenvalueFit> fits;
    for (const auto& e : base_eigen) {
        if (e.value.im.sign() < 0)
            continue; // represented by its conjugate
        std::vector<std::vector<GaussianRational>> cand(static_cast<std::size_t>(nv));
        std::size_t combos = 1;
        for (int v = 0; v < nv; ++v) {
            auto& c = cand[static_cast<std::size_t>(v)];
            for (const auto& s : step1[static_cast<std::size_t>(v)]) {
                GaussianRational d = s - e.value;
                GaussianRational twice = e.value + d + d;
                const auto& s2 = step2[static_cast<std::size_t>(v)];
                if (std::find(s2.begin(), s2.end(), twice) != s2.end() &&
                    std::find(c.begin(), c.end(), d) == c.end())
                    c.push_back(d);
            }
            if (c.empty())
                return std::nullopt;
            combos *= c.size();
            if (combos > 512)
                return std::nullopt;
        }
        std::vector<std::size_t> pick(static_cast<std::size_t>(nv), 0);
        bool found = false;
        for (std::size_t t = 0; t < combos && !found; ++t) {
            std::size_t rest = t;
            for (int v = 0; v < nv; ++v) {
                pick[static_cast<std::size_t>(v)] = rest % cand[static_cast<std::size_t>(v)].size();
                rest /= cand[static_cast<std::size_t>(v)].size();
            }
            MultiPoly re(nv, e.value.re), im(nv, e.value.im);
            for (int v = 0; v < nv; ++v) {
                const auto& d = cand[static_cast<std::size_t>(v)][pick[static_cast<std::size_t>(v)]];
                MultiPoly shift = MultiPoly::variable(nv, v) - MultiPoly(nv, base[static_cast<std::size_t>(v)]);
                re += shift * d.re;
                im += shift * d.im;
            }
            PolyMatrix M = L;
            for (std::size_t i = 0; i < n; ++i)
                M(i, i) -= re;
            if (!im.is_zero()) {
                M = M * M;
                MultiPoly im2 = im * im;
                for (std::size_t i = 0; i < n; ++i)
                    M(i, i) += im2;
            }
            if (poly_determinant(M).is_zero()) {
                if (!im.is_zero() && im.leading().c.sign() < 0)
                    im = -im;
                fits.push_back({re, im, e.blocks});
                found = true;
            }
        }
        if (!found)
            return std::nullopt;
    }
    return fits;
}

SegreReport segre_type(const PolyMatrix& L, const Ring& ring, const std::vector<std::vector<Rational>>& points,
                       std::uint64_t seed) {
    if (!L.square() || L.rows() != static_cast<std::size_t>(ring.n))
        throw DimensionMismatch("affinor of shape " + L.shape() + " on " + std::to_string(ring.n) +
                                " coordinates");
    auto pts = points.empty() ? sample_points(ring, seed, kSegrePoints) : points;
    SegreReport rep;
    std::map<std::string, int> votes;
    for (const auto& p : pts) {
        if (p.size() != static_cast<std::size_t>(ring.nvars()))
            throw DimensionMismatch("sample point of length " + std::to_string(p.size()));
        SegreSample s;
        s.point = p;
        s.eigen = jordan_structure(eval_matrix(L, p));
        s.label = segre_label(s.eigen);
        ++votes[s.label];
        rep.samples.push_back(std::move(s));
    }
    // generic type: most eigenvalues, then most blocks, then most frequent
    std::tuple<std::size_t, std::size_t, int> best{0, 0, -1};
    for (const auto& [label, count] : votes) {
        rep.observed.push_back(label);
        const auto& eig = std::find_if(rep.samples.begin(), rep.samples.end(),
                                       [&](const SegreSample& s) { return s.label == label; })->eigen;
        std::size_t blocks = 0;
        for (const auto& e : eig)
            blocks += e.blocks.size();
        std::tuple<std::size_t, std::size_t, int> key{eig.size(), blocks, count};
        if (key > best) {
            best = key;
            rep.label = label;
        }
    }
    rep.consistent = votes.size() == 1;
    for (const auto& s : rep.samples)
        if (s.label == rep.label) {
            rep.point = s.point;
            rep.eigenvalues = s.eigen;
            break;
        }
    rep.fits = fit_eigenvalues(L, ring, rep.point);
    return rep;
}

} // namespace hydro
