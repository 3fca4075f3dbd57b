// diagnostics.hpp: per-state report of every invariant and norm the
// well-posedness analysis tracks, plus the free-boundary energy functional
//   I = (1/2) int_{Gamma_1} (tau a_{3i} d^alpha D eta_i)^2 tau d3q dsigma,
// which is nonpositive whenever the Rayleigh-Taylor condition holds.
//
// All reported eta-norms are computed on the displacement eta - x; the
// identity part of the map carries no dynamics.
#pragma once

#include <array>

#include "lelab/elliptic.hpp"
#include "lelab/sobolev.hpp"
#include "lelab/state.hpp"

namespace lelab {

struct DiagnosticsReport {
    double t = 0.0;
    double det_dev = 0.0;       // max |det grad eta - 1|
    double cauchy_l2 = 0.0;     // L2 of the Cauchy invariance residual
    double cauchy_ndelta = 0.0; // N_delta of the same residual
    double div_res = 0.0;       // L2 of a_{ik} d_i v_k
    double rt_margin = 0.0;     // max over Gamma_1 of (d3 q + b/2); <= 0 holds
    // smallness deviations at 1.5+delta and the boundedness norms
    double dev_a = 0.0, dev_aat = 0.0, dev_grad = 0.0;
    double eta_norm_25d = 0.0, a_norm_15d = 0.0;
    // the tracked norm set
    double v_25d = 0.0, q_25d = 0.0, chi_q_3d = 0.0, chi_eta_3d = 0.0, psi_q_3d = 0.0;
    double boundary_energy = 0.0;
    int pressure_iterations = 0;
    double pressure_residual = 0.0;
};

double rt_margin_of(const ScalarField& q, double b);

// matrix norms: sqrt of the sum of squared entry norms
double tensor_aniso_norm(const Tensor33& t, double s);

// alpha12 = (alpha_1, alpha_2), alpha_1 + alpha_2 = 3 (alpha_3 = 0)
double boundary_energy(const LagrangianState& s, const std::array<int, 2>& alpha12,
                       const QuotientSpec& quotient);

DiagnosticsReport report(const LagrangianState& s, const CutoffPair& cutoffs, double b,
                         double delta);

}  // namespace lelab
