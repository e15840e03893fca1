#pragma once

#include "hydro/exact/rational_function.hpp"
#include "hydro/tensor/bivector.hpp"
#include "hydro/tensor/check_options.hpp"
#include "hydro/tensor/tensor_array.hpp"

#include <vector>

namespace hydro {

/// Levi-Civita connection of a contravariant metric.
struct Connection {
    int n = 0;
    Tensor<RationalFunction> gamma; ///< gamma(i, j, k) = Gamma^i_{jk}
    Tensor<RationalFunction> b;     ///< b(i, j, k) = b^{ij}_k = -g^{is} Gamma^j_{sk}
};

/// Difference of the Levi-Civita connections of h and g.
struct ObstructionTensor {
    int n = 0;
    Tensor<RationalFunction> T;      ///< T(i, j, k) = T^i_{jk}
    Tensor<RationalFunction> raised; ///< raised(i, j, k) = T^{ijk} = g^{ir} h^{ks} T^j_{rs}
};

/// Gamma from the covariant inverse, b from Gamma.
Connection levi_civita(const Bivector& g);

/// b^{ij}_k straight from the contravariant metric, with denominator det g only:
/// b^{ij}_k = 1/2 (d_k g^{ij} + (g^{is} d_s g^{jb} - g^{js} d_s g^{ib}) g_{bk}).
Tensor<RationalFunction> contravariant_christoffel(const Bivector& g);

/// R(i, j, k, l) = R^i_{jkl} = d_k Gamma^i_{lj} - d_l Gamma^i_{kj} + Gamma^i_{km} Gamma^m_{lj} - Gamma^i_{lm} Gamma^m_{kj}.
Tensor<RationalFunction> riemann_curvature(const Bivector& g);

/// Flatness through the fully contravariant curvature built from b:
/// -g^{lq} d_k b^{ij}_l + g^{lq} d_l b^{ij}_k + b^{ai}_k b^{qj}_a - b^{qi}_l b^{lj}_k.
bool is_flat(const Bivector& g, const CheckOptions& opts = {});

/// Affinor L^i_j = h^{ik} g_{kj}; g must be constant in the coordinates.
PolyMatrix affinor(const Bivector& g, const Bivector& h);

/// N(k, i, j) = N^k_{ij} of a polynomial affinor given as L(i, j) = L^i_j.
Tensor<MultiPoly> nijenhuis_torsion(const PolyMatrix& L);

/// K(i, k, j) = g^{is} d_s h^{kj} + g^{ks} d_s h^{ij} + g^{js} d_s h^{ik}
///            - h^{is} d_s g^{kj} - h^{ks} d_s g^{ij} - h^{js} d_s g^{ik}.
/// Vanishes exactly when h is a Killing bivector of g.
Tensor<MultiPoly> killing_residual(const Bivector& g, const Bivector& h);

/// R(i, j, k, l) = d_k d_l h^{ij}. Requires g constant (flat coordinates).
Tensor<MultiPoly> linearity_residual(const Bivector& g, const Bivector& h);

ObstructionTensor obstruction_tensor(const Bivector& g, const Bivector& h);

/// (Lie_X h)^{ij} = X^s d_s h^{ij} - h^{sj} d_s X^i - h^{is} d_s X^j.
PolyMatrix lie_derivative_bivector(const PolyMatrix& h, const std::vector<MultiPoly>& X, int n);
Bivector lie_derivative_bivector(const Bivector& h, const std::vector<MultiPoly>& X);

/// Vector field X^i = -g1^{is} g_{sl} u^l with g1 the linear part of h.
std::vector<MultiPoly> exactness_field(const Bivector& g, const Bivector& h);
/// Lie_X g = g1 and Lie_X g1 = 0 for the field above. g must be constant.
bool exactness_check(const Bivector& g, const Bivector& h);

} // namespace hydro
