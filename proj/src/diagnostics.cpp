#include "lelab/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

#include "lelab/kernels.hpp"

namespace lelab {

double rt_margin_of(const ScalarField& q, double b) {
    const BoundaryTrace t = restrict_to(vertical_derivative(q), Plane::Gamma1);
    return trace_max(t) + b / 2.0;
}

double tensor_aniso_norm(const Tensor33& t, double s) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double n = aniso_norm(t.m[i][j], s);
            acc += n * n;
        }
    return std::sqrt(acc);
}

double boundary_energy(const LagrangianState& s, const std::array<int, 2>& alpha12,
                       const QuotientSpec& quotient) {
    if (alpha12[0] + alpha12[1] != 3 || alpha12[0] < 0 || alpha12[1] < 0)
        throw std::invalid_argument("boundary_energy: need |alpha| = 3, alpha_3 = 0");
    const Grid& g = s.q.grid();

    // tau d3 q and tau a_{3i} on Gamma_1
    const BoundaryTrace dq3 = restrict_to(shift(vertical_derivative(s.q), quotient), Plane::Gamma1);
    std::array<BoundaryTrace, 3> a3;
    for (int i = 0; i < 3; ++i)
        a3[i] = restrict_to(shift(s.a.m[2][i], quotient), Plane::Gamma1);

    // d^alpha D eta_i; the identity part of eta is annihilated by d^alpha
    std::array<BoundaryTrace, 3> dde;
    for (int i = 0; i < 3; ++i) {
        ScalarField f = diff_quotient(s.eta_disp.c[i], quotient);
        for (int rep = 0; rep < alpha12[0]; ++rep) f = tangential_derivative(f, 1);
        for (int rep = 0; rep < alpha12[1]; ++rep) f = tangential_derivative(f, 2);
        dde[i] = restrict_to(f, Plane::Gamma1);
    }

    double acc = 0.0;
    for (std::size_t p = 0; p < g.plane_size(); ++p) {
        const double contraction = a3[0].data()[p] * dde[0].data()[p] +
                                   a3[1].data()[p] * dde[1].data()[p] +
                                   a3[2].data()[p] * dde[2].data()[p];
        acc += contraction * contraction * dq3.data()[p];
    }
    return 0.5 * acc * g.tangential_cell_area();
}

DiagnosticsReport report(const LagrangianState& s, const CutoffPair& cutoffs, double b,
                         double delta) {
    DiagnosticsReport r;
    r.t = s.t;

    ScalarField det = jacobian_det(s.grad_eta);
    det -= ScalarField(s.q.grid_ptr(), 1.0);
    r.det_dev = max_abs(det);

    const VectorField cres = cauchy_invariance_residual(s);
    r.cauchy_l2 = l2_norm(cres);
    r.cauchy_ndelta = aniso_norm(cres, delta);

    r.div_res = l2_norm(lagrangian_divergence(s));
    r.rt_margin = rt_margin_of(s.q, b);

    const double sm = 1.5 + delta;
    r.dev_a = tensor_aniso_norm(identity_minus(s.a), sm);
    r.dev_aat = tensor_aniso_norm(identity_minus(mat_times_own_transpose(s.a)), sm);
    r.dev_grad = tensor_aniso_norm(identity_minus(s.grad_eta), sm);
    r.eta_norm_25d = aniso_norm(s.eta_disp, 2.5 + delta);
    r.a_norm_15d = tensor_aniso_norm(s.a, sm);

    r.v_25d = aniso_norm(s.v, 2.5 + delta);
    r.q_25d = aniso_norm(s.q, 2.5 + delta);
    r.chi_q_3d = localized_norm(s.q, cutoffs.chi(), 3.0 + delta);
    r.chi_eta_3d = localized_norm(s.eta_disp, cutoffs.chi(), 3.0 + delta);
    r.psi_q_3d = localized_norm(s.q, cutoffs.psi(), 3.0 + delta);

    // aggregated over the four tangential multi-indices at fixed quotient
    const QuotientSpec quot{1, 1e-2};
    r.boundary_energy = 0.0;
    for (int a1 = 0; a1 <= 3; ++a1)
        r.boundary_energy += boundary_energy(s, {a1, 3 - a1}, quot);

    return r;
}

}  // namespace lelab
