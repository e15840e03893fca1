#include "hydro/catalog/mu.hpp"

#include "hydro/errors.hpp"

namespace hydro {

Bivector mu_bivector(const Ring& ring, int k) {
    const int n = ring.n;
    if (n < 1 || k < 0)
        throw OutOfRange("mu(" + std::to_string(n) + ";" + std::to_string(k) + ")");
    auto m = zero_poly_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n), ring.nvars());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int idx = i + j - 1 + k;
            if (idx > n)
                continue;
            m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                ring.u(idx) * Rational(3 * (i + j) - 2 * (n + 2 - k));
        }
    return Bivector(ring, std::move(m));
}

Bivector mu_bivector(int n, int k) { return mu_bivector(Ring(n), k); }

Bivector jordan_constant_part(const Ring& ring, const MultiPoly& lambda) {
    const auto n = static_cast<std::size_t>(ring.n);
    auto m = zero_poly_matrix(n, n, ring.nvars());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i + j + 2 == n)
                m(i, j) = ring.constant(Rational(1));
            else if (i + j + 1 == n)
                m(i, j) = lambda;
        }
    return Bivector(ring, std::move(m));
}

} // namespace hydro
