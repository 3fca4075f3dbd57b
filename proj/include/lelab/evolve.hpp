// evolve.hpp: RK4 time integration of the closed Lagrangian system
// eta_t = v, v_t = -a_{ki} d_k q with a full pressure solve per stage.
// No projection or cleanup is applied to v: invariant drift (unit Jacobian,
// Cauchy invariance, Lagrangian divergence) is measured, not hidden.
#pragma once

#include <optional>
#include <string>

#include "lelab/diagnostics.hpp"
#include "lelab/elliptic.hpp"
#include "lelab/state.hpp"

namespace lelab {

enum class Policy { Warn, Abort };

enum class RejectionReason { None, PressureNonConvergence, RtAbort, SmallnessExceeded };

const char* to_string(RejectionReason r);

struct EvolveConfig {
    double dt = 1e-3;
    double t_end = 0.1;  // the a priori window convention caps this at 1
    double b = 1.0;      // Rayleigh-Taylor threshold
    Policy rt_policy = Policy::Warn;
    Policy smallness_policy = Policy::Warn;
    double eps = 0.25;   // smallness threshold for the EQ13-style deviations
    double delta = 0.25;
    double pressure_tol = 1e-11;
    int pressure_max_iter = 60;

    void validate() const;  // throws std::invalid_argument
};

struct StepOutcome {
    std::optional<LagrangianState> state;  // engaged iff accepted
    DiagnosticsReport report;              // valid iff accepted
    bool accepted = false;
    RejectionReason reason = RejectionReason::None;
};

// the state at t = 0: identity map, omega0 = curl v0, q from the pressure
// solve (which reduces to the q0 problem when div v0 = 0)
LagrangianState initial_state(const VectorField& v0, const PoissonSolver& solver,
                              const EvolveConfig& cfg);

// (d eta/dt, dv/dt) from the state's cached cofactor and pressure
struct Rates {
    VectorField d_eta;
    VectorField d_v;
};
Rates euler_rhs(const LagrangianState& s);

// m = max over Gamma_1 of (d3 q + b/2); m <= 0 means the condition holds
double rt_monitor(const LagrangianState& s, const EvolveConfig& cfg);

struct SmallnessReport {
    double d_a = 0.0;      // N_{1.5+delta}(I - a)
    double d_aat = 0.0;    // N_{1.5+delta}(I - a a^T)
    double d_grad = 0.0;   // N_{1.5+delta}(I - grad eta)
    double eta_norm = 0.0; // N_{2.5+delta}(eta - x)
    double a_norm = 0.0;   // N_{1.5+delta}(a)
};
SmallnessReport smallness_monitor(const LagrangianState& s, const EvolveConfig& cfg);

// One RK4 step. On rejection the returned outcome carries no state and the
// caller's trajectory is untouched.
StepOutcome step(const LagrangianState& s, const EvolveConfig& cfg, const PoissonSolver& solver,
                 const CutoffPair& cutoffs);

}  // namespace lelab
