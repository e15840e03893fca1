#pragma once

#include "hydro/tensor/bivector.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace hydro::testing {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kPropertySeed = 1234567;

Rational random_rational(Rng& rng, long range = 9, long max_den = 5);
/// Random polynomial with up to `terms` terms of total degree <= max_deg.
MultiPoly random_poly(Rng& rng, int nvars, int terms = 4, int max_deg = 3, long range = 9);
/// Random symmetric degree <= 1 bivector, redrawn until not identically degenerate.
Bivector random_linear_bivector(Rng& rng, const Ring& ring, long range = 3);
/// Random symmetric invertible constant matrix.
RationalMatrix random_constant_metric(Rng& rng, int n, long range = 3);

/// Bivector from rows of polynomial text over ring.names().
Bivector bivector(const Ring& ring, const std::vector<std::vector<std::string>>& rows);

/// A pair violating one of the conditions linearity, nijenhuis, killing.
struct NegativeControl {
    std::string name;
    std::string condition;
    Bivector g;
    Bivector h; ///< quadratic for the linearity controls
};

/// Three controls per condition.
std::vector<NegativeControl> negative_controls();

/// A linear pair with constant g and the expected agreement data.
struct CorpusPair {
    std::string name;
    Bivector g;
    Bivector h;
};

/// Seeded random pairs at size n: members of solution families (passing),
/// perturbed members and unconstrained random bivectors (mostly failing).
std::vector<CorpusPair> random_pairs(int n, int count, std::uint64_t seed);

} // namespace hydro::testing
