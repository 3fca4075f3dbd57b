// elliptic.hpp: the three Poisson problems on the slab. Everything reduces
// to one constant-coefficient backbone: for each tangential mode k the 1-D
// two-point problem (d33 - |k|^2) u = r with a Dirichlet row on Gamma_1 and
// a Neumann row on Gamma_0, solved by Chebyshev collocation. The per-mode
// LU factorizations depend only on the grid and are computed once.
//
// The evolving-coefficient pressure problem is solved as a perturbation
// fixed point around that backbone: the divergence-form deviation
// d_j((delta_jk - a_ji a_ki) d_k q) and the Gamma_0 Neumann datum
// (delta_k3 - a_k3) d_k q are re-evaluated from the previous iterate.
#pragma once

#include <memory>
#include <utility>

#include "lelab/field.hpp"
#include "lelab/state.hpp"

namespace lelab {

struct MixedBVP {
    ScalarField rhs;
    BoundaryTrace dirichlet_top;   // value of the unknown on Gamma_1
    BoundaryTrace neumann_bottom;  // value of d3(unknown) on Gamma_0
};

struct PressureSolveReport {
    int iterations = 0;
    double final_residual = 0.0;        // last successive-iterate N_1 distance
    double contraction_estimate = 0.0;  // last observed ratio of distances
    bool converged = false;
};

class PoissonSolver {
  public:
    explicit PoissonSolver(GridPtr grid);
    ~PoissonSolver();
    PoissonSolver(PoissonSolver&&) noexcept;
    PoissonSolver& operator=(PoissonSolver&&) noexcept;

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }

    // exact mode-wise solve of the constant-coefficient problem
    ScalarField solve_constant_poisson(const MixedBVP& bvp) const;

    // EQ27-EQ29 fixed point; q^(0) = 0. Not converged after max_iter means
    // the state left the perturbative regime; the caller decides.
    std::pair<ScalarField, PressureSolveReport> solve_pressure(const LagrangianState& s,
                                                               double tol = 1e-11,
                                                               int max_iter = 60) const;

    // Delta q0 = -d_i v_j d_j v_i, q0 = 0 on Gamma_1, d3 q0 = 0 on Gamma_0;
    // also returns the Gamma_1 trace of d3 q0 for the Rayleigh-Taylor check
    std::pair<ScalarField, BoundaryTrace> solve_initial_pressure(const VectorField& v0) const;

  private:
    GridPtr grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace lelab
