#pragma once

#include "msymm/kernel.hpp"
#include "msymm/trig.hpp"

namespace msymm {

// Dense nodal discretization of the modified single-layer operator:
// matrix(k,j) = (S0 applied to the j-th nodal indicator) evaluated at t_k.
struct DiscreteOperator {
    int n = 0;
    Eigen::MatrixXd matrix;  // 2n x 2n
    Convention convention = Convention::doubled;
};

// Exact quadrature weight of the log-singular part against the Lagrange
// basis, R_j(t) = -(1/2pi) int L_j(s) ln(4 sin^2((t-s)/2)) ds, by the closed
// form (1/n)( sum_{m=1}^{n-1} cos(m(t-t_j))/m + cos(n(t-t_j))/(2n) ).
double kress_weight(int n, int j, double t);

// Pointwise discrete single-layer value
// (S_K psi)(t) ~= sum_j v_j ( scale*R_j(t) + (pi/n) k(t,t_j) ),
// spectrally accurate for analytic curves and densities.
double apply_SK(const KernelParts& parts, const NodalValues& v, double t);

// Interpolated single-layer: the R-part is already in X_n, the smooth part
// passes through Pi_n; coincides with apply_SK at the nodes.
TrigPoly apply_STK(const KernelParts& parts, const NodalValues& v);

// Full modified operator: apply_STK(v) + g3 * (2pi a_0 of Pi_n v).
TrigPoly apply_S0(const KernelParts& parts, const NodalValues& v);

// Dense 2n x 2n matrix at degree parts.n; deterministic.
DiscreteOperator assemble(const KernelParts& parts);

// Conjugation of the nodal matrix to the L2-orthonormal coefficient basis
// [const, cos 1..n, sin 1..n-1]; the transpose of the result is the exact
// discrete adjoint.
Eigen::MatrixXd coefficient_matrix(const DiscreteOperator& op);

}  // namespace msymm
