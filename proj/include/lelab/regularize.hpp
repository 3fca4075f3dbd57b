// regularize.hpp: construction of the regularized datum v0r from v0 in
// three steps: vertical shift/rescale (component i samples v0_i at
// (x1, x2, (x3+r)/(1+2r)), third component additionally scaled by
// 1/(1+2r)), mollification by a separable standard bump of radius r, and
// an elliptic divergence correction that restores incompressibility and
// the bottom boundary condition without touching the curl.
//
// Vertical evaluation between collocation nodes is barycentric; values
// needed beyond [0,1] (mollification reaches into [-r, 1+r]) come from a
// scaled-reflection extension that matches value and first three
// derivatives at each face.
#pragma once

#include "lelab/elliptic.hpp"
#include "lelab/field.hpp"
#include "lelab/sobolev.hpp"

namespace lelab {

struct RegularizationResult {
    double r = 0.0;
    VectorField v0r;
    ScalarField hr;
    double datum_error = 0.0;          // N_{2.5+delta}(v0r - v0)
    double curl_ratio = 0.0;           // localized curl norm ratio
    double div_residual = 0.0;         // L2 of div v0r
    double bottom_bc_residual = 0.0;   // max |(v0r)_3| on Gamma_0
};

// barycentric evaluation of the vertical collocation interpolant of f at
// height y for every tangential node; y in [0,1]
ScalarField resample_vertical(const ScalarField& f, double y);
// per-node targets: output value at (x1,x2,x3_j) is f(x1,x2,targets[j])
ScalarField resample_vertical(const ScalarField& f, const std::vector<double>& targets);

VectorField shift_rescale(const VectorField& v0, double r);

// separable mollifier: exact Fourier multiplier tangentially, precomputed
// quadrature-convolution matrix vertically (unit mass in each factor)
ScalarField mollify(const ScalarField& f, double r);
VectorField mollify(const VectorField& f, double r);

// the tangential multiplier value at wavenumber k for radius r (exposed so
// tests can check the precomputed table against direct quadrature)
double mollifier_multiplier(double k, double r);

// solves EQ09-shape problem for h and returns (w - grad h, h)
std::pair<VectorField, ScalarField> divergence_correction(const VectorField& w,
                                                          const PoissonSolver& solver);

RegularizationResult regularize_datum(const VectorField& v0, double r,
                                      const PoissonSolver& solver, const CutoffPair& cutoffs,
                                      double delta);

}  // namespace lelab
