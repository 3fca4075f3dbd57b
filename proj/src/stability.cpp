#include "lelab/stability.hpp"

#include <cmath>

namespace lelab {

namespace {

TwinRow difference_row(const LagrangianState& s, const LagrangianState& st,
                       const CutoffPair& cutoffs, double delta) {
    TwinRow row;
    row.t = s.t;

    const VectorField V = s.v - st.v;
    const VectorField E = s.eta_disp - st.eta_disp;
    const ScalarField Q = s.q - st.q;

    row.v_diff_15d = aniso_norm(V, 1.5 + delta);
    row.chi_e_2d = localized_norm(E, cutoffs.chi(), 2.0 + delta);
    row.Y = row.v_diff_15d + row.chi_e_2d;
    row.q_diff_15d = aniso_norm(Q, 1.5 + delta);
    row.psi_q_diff_2d = localized_norm(Q, cutoffs.psi(), 2.0 + delta);
    row.v_diff_l2 = l2_norm(V);
    row.e_diff_15d = aniso_norm(E, 1.5 + delta);
    row.chi_e_1 = localized_norm(E, cutoffs.chi(), 1.0);

    const ScalarField chi2 = multiply(cutoffs.chi(), cutoffs.chi());
    double acc = 0.0;
    double acc_at = 0.0;
    const Tensor33 at_a = cofactor_rate(s.grad_eta, grad_tensor(s.v));
    const Tensor33 at_b = cofactor_rate(st.grad_eta, grad_tensor(st.v));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const ScalarField Aij = s.a.m[i][j] - st.a.m[i][j];
            const double n = l2_norm(multiply(chi2, Aij));
            acc += n * n;
            const double nt = aniso_norm(at_a.m[i][j] - at_b.m[i][j], 0.5 + delta);
            acc_at += nt * nt;
        }
    row.chi2_a_l2 = std::sqrt(acc);
    row.a_rate_05d = std::sqrt(acc_at);
    return row;
}

double fit_exponent(const std::vector<TwinRow>& rows) {
    // log-linear least squares on Y(t), skipping near-zero startup rows
    double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
    int n = 0;
    for (const TwinRow& r : rows) {
        if (r.Y < 1e-13) continue;
        const double ly = std::log(r.Y);
        st += r.t;
        sy += ly;
        stt += r.t * r.t;
        sty += r.t * ly;
        ++n;
    }
    if (n < 2) return 0.0;
    const double denom = n * stt - st * st;
    if (std::abs(denom) < 1e-300) return 0.0;
    return (n * sty - st * sy) / denom;
}

}  // namespace

TwinRunResult twin_run(const VectorField& datum, const VectorField& perturbation, double kappa,
                       const EvolveConfig& cfg, const PoissonSolver& solver,
                       const CutoffPair& cutoffs) {
    cfg.validate();
    TwinRunResult res;

    VectorField v0b = datum;
    v0b.axpy(kappa, perturbation);
    LagrangianState sa = initial_state(datum, solver, cfg);
    LagrangianState sb = initial_state(v0b, solver, cfg);

    res.rows.push_back(difference_row(sa, sb, cutoffs, cfg.delta));

    const int nsteps = static_cast<int>(std::llround(cfg.t_end / cfg.dt));
    for (int n = 0; n < nsteps; ++n) {
        StepOutcome oa = step(sa, cfg, solver, cutoffs);
        if (!oa.accepted) {
            res.reason = oa.reason;
            return res;
        }
        StepOutcome ob = step(sb, cfg, solver, cutoffs);
        if (!ob.accepted) {
            res.reason = ob.reason;
            return res;
        }
        sa = std::move(*oa.state);
        sb = std::move(*ob.state);
        res.rows.push_back(difference_row(sa, sb, cutoffs, cfg.delta));
    }
    res.completed = true;
    res.fitted_c = fit_exponent(res.rows);
    return res;
}

DifferenceIdentityRatios difference_identities(const TwinRunResult& run) {
    DifferenceIdentityRatios out;
    double int_v15 = 0.0;  // trapezoid of ||V||_{1.5+d}
    double int_y = 0.0;    // trapezoid of Y
    const auto& rows = run.rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i > 0) {
            const double dt = rows[i].t - rows[i - 1].t;
            int_v15 += 0.5 * dt * (rows[i].v_diff_15d + rows[i - 1].v_diff_15d);
            int_y += 0.5 * dt * (rows[i].Y + rows[i - 1].Y);
        }
        auto ratio = [](double lhs, double rhs) {
            return rhs > 1e-14 ? lhs / rhs : 0.0;
        };
        out.e85 = std::max(out.e85, ratio(rows[i].e_diff_15d, int_v15));
        out.e86 = std::max(out.e86, ratio(rows[i].chi2_a_l2, rows[i].chi_e_1));
        out.e87 = std::max(out.e87,
                           ratio(rows[i].a_rate_05d, rows[i].v_diff_15d + rows[i].e_diff_15d));
        out.e117a = std::max(out.e117a, ratio(rows[i].q_diff_15d, rows[i].Y + int_y));
    }
    return out;
}

}  // namespace lelab
