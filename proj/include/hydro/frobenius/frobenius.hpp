#pragma once

#include "hydro/pencil/killing.hpp"
#include "hydro/tensor/bivector.hpp"
#include "hydro/tensor/tensor_array.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hydro {

/// Frobenius structure with constant structure constants in flat coordinates.
struct FrobeniusData {
    int n = 0;
    RationalMatrix g;         ///< covariant metric g_{ij}
    Tensor<Rational> c;       ///< c(i, j, k) = c^i_{jk}
    std::vector<Rational> e;  ///< unity
    VectorField E;            ///< Euler field on Ring(n)
    int charge = 3;

    /// c_{ijk} = g_{is} c^s_{jk}.
    Tensor<Rational> lowered() const;
    /// F = 1/6 c_{ijk} u^i u^j u^k.
    MultiPoly potential() const;
};

/// g_{ij} = 1 iff i + j = n + 1, c^i_{jk} = 1 iff j + k - i = n, e = d/du^n,
/// E^k = (3k - 2n - 1) u^k. Requires n >= 2.
FrobeniusData build_cp_frobenius(int n);

struct AxiomResult {
    std::string name;
    bool passed = false;
    std::string witness; ///< 1-based indices of the first violation
};

struct FrobeniusReport {
    int n = 0;
    std::vector<AxiomResult> axioms;
    /// Lie_E e = unity_scaling e, Lie_E c = product_scaling c, Lie_E g = metric_scaling g
    /// for the unnormalized E; empty when the Lie derivative is not proportional.
    std::optional<Rational> unity_scaling;
    std::optional<Rational> product_scaling;
    std::optional<Rational> metric_scaling;

    bool passed() const;
    const AxiomResult& axiom(const std::string& name) const;
};

/// Commutativity, associativity, invariance, flat unity, potential, and the
/// Euler conditions Lie e = -e, Lie c = c, Lie g = (2 - d) g for E / (n - 1).
FrobeniusReport check_frobenius_axioms(const FrobeniusData& f);

/// Lie derivative of a tensor field whose first `upper` indices are contravariant.
Tensor<MultiPoly> lie_derivative(const Tensor<MultiPoly>& t, int upper, const VectorField& X);

/// g^{il} c^j_{lk} E^k.
Bivector intersection_form(const FrobeniusData& f);

/// c^i_{jk} = 1 iff j + k - i = 1: the cohomology ring in the basis of powers
/// of the hyperplane class.
Tensor<Rational> cohomology_ring_constants(int n);

/// c^{i'}_{j'k'} with i' = n + 1 - i.
Tensor<Rational> reverse_labels(const Tensor<Rational>& c);

/// reverse_labels(cohomology_ring_constants(n)) == build_cp_frobenius(n).c.
bool cohomology_ring_correspondence(int n);

} // namespace hydro
