// state.hpp: the Lagrangian unknowns (eta, v, q) and the exact algebraic
// identities tying them together: the permutation-symbol cofactor formula,
// unit Jacobian, Cauchy invariance, and the Lagrangian divergence/curl
// identities.
//
// The particle map is carried as its periodic displacement d = eta - x
// (eta itself has no tangential Fourier representation); grad eta = I +
// grad d and is cached on the state together with the cofactor matrix.
#pragma once

#include "lelab/field.hpp"

namespace lelab {

// 3x3 matrix of scalar fields; in Jacobian context m(i,j) = d_i eta_j
struct Tensor33 {
    std::array<std::array<ScalarField, 3>, 3> m;

    ScalarField& operator()(int i, int j) { return m[i][j]; }
    const ScalarField& operator()(int i, int j) const { return m[i][j]; }
    const Grid& grid() const { return m[0][0].grid(); }
    const GridPtr& grid_ptr() const { return m[0][0].grid_ptr(); }
};
using JacobianTensor = Tensor33;

// entries d_i w_j (derivative index first)
Tensor33 grad_tensor(const VectorField& w);

// I + grad(displacement)
Tensor33 grad_eta_from_displacement(const VectorField& eta_disp);

// pointwise cofactor matrix by the permutation-symbol formula; never by
// matrix inversion (the Piola identity is exact for this form)
Tensor33 cofactor(const Tensor33& grad_eta);

// pointwise determinant field
ScalarField jacobian_det(const Tensor33& grad_eta);

// time derivative of the cofactor formula: bilinear in (grad eta, grad v)
Tensor33 cofactor_rate(const Tensor33& grad_eta, const Tensor33& grad_v);

// delta_ij - t_ij
Tensor33 identity_minus(const Tensor33& t);
// (t t^T)_{jk} = sum_i t(j,i) t(k,i)
Tensor33 mat_times_own_transpose(const Tensor33& t);
// out_i = sum_k t(k,i) g_k
VectorField contract_first(const Tensor33& t, const VectorField& g);
// sum_{ij} a(i,j) b(i,j)
ScalarField double_contract(const Tensor33& a, const Tensor33& b);
// component i: sum_k d_k t(k,i); zero for exact cofactor matrices
VectorField piola_residual(const Tensor33& t);

double tensor_l2(const Tensor33& t);
double tensor_max_abs(const Tensor33& t);

struct LagrangianState {
    double t = 0.0;
    VectorField eta_disp;  // eta - x
    VectorField v;
    ScalarField q;         // pressure at time t
    Tensor33 grad_eta;     // cached from eta_disp
    Tensor33 a;            // cofactor of grad_eta
    VectorField omega0;    // curl of the run's initial datum, frozen
};

// fills the cached Jacobian and cofactor; q is supplied by the caller
// (pressure solve or a synthetic profile in tests)
LagrangianState assemble_state(double t, VectorField eta_disp, VectorField v, ScalarField q,
                               VectorField omega0);

// eps_{ijk} d_j v_m d_k eta_m - (omega0)_i
VectorField cauchy_invariance_residual(const LagrangianState& s);

// a_{ik} d_i v_k; zero for exact solutions
ScalarField lagrangian_divergence(const LagrangianState& s);

// curl v minus the curl form of the Cauchy invariance; algebraically equal
// to cauchy_invariance_residual, assembled through the rearranged route
VectorField curl_identity_residual(const LagrangianState& s);

}  // namespace lelab
