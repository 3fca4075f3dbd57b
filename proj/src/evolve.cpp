#include "lelab/evolve.hpp"

#include <cmath>
#include <stdexcept>

namespace lelab {

const char* to_string(RejectionReason r) {
    switch (r) {
        case RejectionReason::None: return "none";
        case RejectionReason::PressureNonConvergence: return "pressure_non_convergence";
        case RejectionReason::RtAbort: return "rt_abort";
        case RejectionReason::SmallnessExceeded: return "smallness_exceeded";
    }
    return "unknown";
}

void EvolveConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("EvolveConfig: dt > 0 required");
    if (!(t_end > 0.0 && t_end <= 1.0))
        throw std::invalid_argument("EvolveConfig: t_end in (0, 1] required");
    if (!(b > 0.0)) throw std::invalid_argument("EvolveConfig: b > 0 required");
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("EvolveConfig: eps in (0,1]");
    if (!(delta > 0.0 && delta <= 0.5))
        throw std::invalid_argument("EvolveConfig: delta in (0, 0.5]");
}

LagrangianState initial_state(const VectorField& v0, const PoissonSolver& solver,
                              const EvolveConfig& cfg) {
    const GridPtr gp = v0.grid_ptr();
    VectorField zero(gp, 0.0);
    LagrangianState s =
        assemble_state(0.0, std::move(zero), v0, ScalarField(gp, 0.0), curl(v0));
    auto [q, rep] = solver.solve_pressure(s, cfg.pressure_tol, cfg.pressure_max_iter);
    if (!rep.converged)
        throw std::runtime_error("initial_state: pressure solve did not converge");
    s.q = std::move(q);
    return s;
}

Rates euler_rhs(const LagrangianState& s) {
    Rates r;
    r.d_eta = s.v;
    r.d_v = contract_first(s.a, gradient(s.q));
    r.d_v *= -1.0;
    return r;
}

double rt_monitor(const LagrangianState& s, const EvolveConfig& cfg) {
    return rt_margin_of(s.q, cfg.b);
}

SmallnessReport smallness_monitor(const LagrangianState& s, const EvolveConfig& cfg) {
    SmallnessReport r;
    const double sm = 1.5 + cfg.delta;
    r.d_a = tensor_aniso_norm(identity_minus(s.a), sm);
    r.d_aat = tensor_aniso_norm(identity_minus(mat_times_own_transpose(s.a)), sm);
    r.d_grad = tensor_aniso_norm(identity_minus(s.grad_eta), sm);
    r.eta_norm = aniso_norm(s.eta_disp, 2.5 + cfg.delta);
    r.a_norm = tensor_aniso_norm(s.a, sm);
    return r;
}

namespace {

// rates at an off-state stage point (d, v); solves the stage pressure
bool stage_rates(const GridPtr& gp, const VectorField& d, const VectorField& v,
                 const VectorField& omega0, const PoissonSolver& solver,
                 const EvolveConfig& cfg, Rates& out) {
    LagrangianState stage =
        assemble_state(0.0, d, v, ScalarField(gp, 0.0), omega0);
    auto [q, rep] = solver.solve_pressure(stage, cfg.pressure_tol, cfg.pressure_max_iter);
    if (!rep.converged) return false;
    stage.q = std::move(q);
    out = euler_rhs(stage);
    return true;
}

}  // namespace

StepOutcome step(const LagrangianState& s, const EvolveConfig& cfg, const PoissonSolver& solver,
                 const CutoffPair& cutoffs) {
    StepOutcome out;
    const GridPtr gp = s.v.grid_ptr();
    const double dt = cfg.dt;

    // stage 1 reuses the state's own pressure
    const Rates k1 = euler_rhs(s);

    auto at = [&](const Rates& k, double c) {
        VectorField d = s.eta_disp;
        d.axpy(c, k.d_eta);
        VectorField v = s.v;
        v.axpy(c, k.d_v);
        return std::pair<VectorField, VectorField>(std::move(d), std::move(v));
    };

    Rates k2, k3, k4;
    {
        auto [d, v] = at(k1, dt / 2.0);
        if (!stage_rates(gp, d, v, s.omega0, solver, cfg, k2)) {
            out.reason = RejectionReason::PressureNonConvergence;
            return out;
        }
    }
    {
        auto [d, v] = at(k2, dt / 2.0);
        if (!stage_rates(gp, d, v, s.omega0, solver, cfg, k3)) {
            out.reason = RejectionReason::PressureNonConvergence;
            return out;
        }
    }
    {
        auto [d, v] = at(k3, dt);
        if (!stage_rates(gp, d, v, s.omega0, solver, cfg, k4)) {
            out.reason = RejectionReason::PressureNonConvergence;
            return out;
        }
    }

    VectorField d_new = s.eta_disp;
    d_new.axpy(dt / 6.0, k1.d_eta);
    d_new.axpy(dt / 3.0, k2.d_eta);
    d_new.axpy(dt / 3.0, k3.d_eta);
    d_new.axpy(dt / 6.0, k4.d_eta);
    VectorField v_new = s.v;
    v_new.axpy(dt / 6.0, k1.d_v);
    v_new.axpy(dt / 3.0, k2.d_v);
    v_new.axpy(dt / 3.0, k3.d_v);
    v_new.axpy(dt / 6.0, k4.d_v);

    LagrangianState s_new = assemble_state(s.t + dt, std::move(d_new), std::move(v_new),
                                           ScalarField(gp, 0.0), s.omega0);
    auto [q, prep] = solver.solve_pressure(s_new, cfg.pressure_tol, cfg.pressure_max_iter);
    if (!prep.converged) {
        out.reason = RejectionReason::PressureNonConvergence;
        return out;
    }
    s_new.q = std::move(q);

    DiagnosticsReport rep = report(s_new, cutoffs, cfg.b, cfg.delta);
    rep.pressure_iterations = prep.iterations;
    rep.pressure_residual = prep.final_residual;

    if (cfg.rt_policy == Policy::Abort && rep.rt_margin > 0.0) {
        out.reason = RejectionReason::RtAbort;
        out.report = rep;
        return out;
    }
    if (cfg.smallness_policy == Policy::Abort &&
        std::max({rep.dev_a, rep.dev_aat, rep.dev_grad}) > cfg.eps) {
        out.reason = RejectionReason::SmallnessExceeded;
        out.report = rep;
        return out;
    }

    out.state = std::move(s_new);
    out.report = rep;
    out.accepted = true;
    return out;
}

}  // namespace lelab
