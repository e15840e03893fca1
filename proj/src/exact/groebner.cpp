#include "hydro/exact/groebner.hpp"

#include "hydro/errors.hpp"

#include <algorithm>
#include <utility>

namespace hydro {

namespace {

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (int i = 0; i < kMaxVars; ++i) {
        out.e[static_cast<std::size_t>(i)] = std::max(a.e[static_cast<std::size_t>(i)], b.e[static_cast<std::size_t>(i)]);
        out.deg = static_cast<std::uint16_t>(out.deg + out.e[static_cast<std::size_t>(i)]);
    }
    return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a.e[static_cast<std::size_t>(i)] && b.e[static_cast<std::size_t>(i)])
            return false;
    return true;
}

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g) {
    const Monomial l = lcm(f.leading().m, g.leading().m);
    const int nv = f.nvars();
    return MultiPoly::monomial(nv, l / f.leading().m, Rational(1) / f.leading().c) * f -
           MultiPoly::monomial(nv, l / g.leading().m, Rational(1) / g.leading().c) * g;
}

} // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    MultiPoly rest = f;
    MultiPoly out(f.nvars());
    while (!rest.is_zero()) {
        const Term lt = rest.leading();
        const MultiPoly* hit = nullptr;
        for (const auto& g : basis)
            if (g.leading().m.divides(lt.m)) {
                hit = &g;
                break;
            }
        if (hit) {
            rest -= MultiPoly::monomial(f.nvars(), lt.m / hit->leading().m, lt.c / hit->leading().c) * *hit;
        } else {
            MultiPoly head = MultiPoly::monomial(f.nvars(), lt.m, lt.c);
            out += head;
            rest -= head;
        }
    }
    return out;
}

std::vector<MultiPoly> groebner_basis(std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> G;
    for (auto& g : gens) {
        if (g.is_zero())
            continue;
        if (!G.empty() && g.nvars() != G.front().nvars())
            throw DimensionMismatch("groebner generators in different rings");
        G.push_back(g.monic());
    }
    if (G.empty())
        return G;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < G.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        // smallest lcm first keeps intermediate degrees low
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            return grlex_less(lcm(G[a.first].leading().m, G[a.second].leading().m),
                              lcm(G[b.first].leading().m, G[b.second].leading().m));
        });
        auto [i, j] = *best;
        pairs.erase(best);
        if (coprime(G[i].leading().m, G[j].leading().m))
            continue;
        MultiPoly r = normal_form(spoly(G[i], G[j]), G);
        if (r.is_zero())
            continue;
        G.push_back(r.monic());
        for (std::size_t k = 0; k + 1 < G.size(); ++k)
            pairs.emplace_back(k, G.size() - 1);
    }
    // minimal, then reduced
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j || !G[j].leading().m.divides(G[i].leading().m))
                continue;
            redundant = !(G[j].leading().m == G[i].leading().m) || j < i;
        }
        if (!redundant)
            minimal.push_back(G[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        MultiPoly tail = minimal[i] - MultiPoly::monomial(minimal[i].nvars(), minimal[i].leading().m, minimal[i].leading().c);
        reduced.push_back((MultiPoly::monomial(minimal[i].nvars(), minimal[i].leading().m, Rational(1)) +
                           normal_form(tail, others))
                              .monic());
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return grlex_less(a.leading().m, b.leading().m); });
    return reduced;
}

int zero_set_dimension(const std::vector<MultiPoly>& basis, int nvars) {
    for (const auto& g : basis)
        if (g.is_constant() && !g.is_zero())
            return -1;
    if (nvars > 24)
        throw OutOfRange("zero_set_dimension on " + std::to_string(nvars) + " variables");
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << nvars); ++mask) {
        const int size = __builtin_popcountl(mask);
        if (size <= best)
            continue;
        bool free = true;
        for (const auto& g : basis) {
            bool inside = true;
            for (int i = 0; i < nvars && inside; ++i)
                if (g.leading().m.e[static_cast<std::size_t>(i)] && !(mask >> i & 1ul))
                    inside = false;
            if (inside) {
                free = false;
                break;
            }
        }
        if (free)
            best = size;
    }
    return best;
}

} // namespace hydro
