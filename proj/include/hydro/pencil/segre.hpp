#pragma once

#include "hydro/exact/gaussian.hpp"
#include "hydro/exact/poly_matrix.hpp"
#include "hydro/tensor/bivector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hydro {

struct EigenBlocks {
    GaussianRational value;
    std::vector<int> blocks; ///< Jordan block sizes, descending
};

/// Jordan data of a constant matrix: eigenvalues in Q or Q(i) with block sizes
/// from the rank sequence of (L - lambda I)^k. Throws UnsupportedEigenvalueField.
std::vector<EigenBlocks> jordan_structure(const RationalMatrix& L);

/// "[2]", "[2,2]", "[2 | 1]" (two eigenvalues) and "[2c | 2c]" (conjugate pair).
std::string segre_label(const std::vector<EigenBlocks>& eig);

struct SegreSample {
    std::vector<Rational> point; ///< all ring variables, coordinates first
    std::vector<EigenBlocks> eigen;
    std::string label;
};

/// An eigenvalue re + i*im that is polynomial of degree <= 1 in the ring variables.
struct EigenvalueFit {
    MultiPoly re;
    MultiPoly im; ///< zero for real eigenvalues; leading coefficient positive otherwise
    std::vector<int> blocks;
    std::string str(const Ring& ring) const;
};

struct SegreReport {
    std::string label;                ///< most refined type seen: most eigenvalues, then most blocks
    std::vector<Rational> point;      ///< first sample with that type
    std::vector<EigenBlocks> eigenvalues;
    bool consistent = true;           ///< all samples agree
    std::vector<std::string> observed; ///< distinct labels, sorted
    std::vector<SegreSample> samples;
    /// Present when every eigenvalue is a degree <= 1 polynomial.
    std::optional<std::vector<EigenvalueFit>> fits;
};

inline constexpr std::uint64_t kSegreSeed = 7;
inline constexpr int kSegrePoints = 5;

/// Seeded integer points in [-range, range] for every ring variable.
std::vector<std::vector<Rational>> sample_points(const Ring& ring, std::uint64_t seed, int count,
                                                 long range = 50);

/// Segre type of the affinor L (entries on `ring`) at the given points, or at
/// kSegrePoints seeded points when none are given.
SegreReport segre_type(const PolyMatrix& L, const Ring& ring,
                       const std::vector<std::vector<Rational>>& points = {},
                       std::uint64_t seed = kSegreSeed);

/// Interpolates each eigenvalue at `base` by a degree <= 1 polynomial and
/// confirms it symbolically; nullopt when that fails.
std::optional<std::vector<EigenvalueFit>> fit_eigenvalues(const PolyMatrix& L, const Ring& ring,
                                                          const std::vector<Rational>& base);

} // namespace hydro
