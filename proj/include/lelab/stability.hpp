// stability.hpp: the twin-run difference experiment. Two states evolve in
// lockstep from v0 and v0 + kappa*p; every step records the difference
// quantities (V, Q, E, A) and the controlling functional
//   Y = ||V||_{1.5+delta} + ||chi E||_{2+delta},
// then an exponential envelope Y <= Y(0) e^{Ct} is fitted. The recorded
// series also feed empirical ratio checks of the difference-system
// inequalities (map, cofactor, cofactor-rate, and pressure bounds).
#pragma once

#include <vector>

#include "lelab/evolve.hpp"

namespace lelab {

struct TwinRow {
    double t = 0.0;
    double Y = 0.0;
    double q_diff_15d = 0.0;    // ||Q||_{1.5+delta}
    double psi_q_diff_2d = 0.0; // ||psi Q||_{2+delta}
    double v_diff_l2 = 0.0;     // ||V||_{L2}
    // inputs of the empirical inequality ratios
    double v_diff_15d = 0.0;    // ||V||_{1.5+delta}
    double e_diff_15d = 0.0;    // ||E||_{1.5+delta}
    double chi_e_2d = 0.0;      // ||chi E||_{2+delta}
    double chi_e_1 = 0.0;       // ||chi E||_{1}
    double chi2_a_l2 = 0.0;     // ||chi^2 A||_{L2}
    double a_rate_05d = 0.0;    // ||A_t||_{0.5+delta}
};

struct TwinRunResult {
    std::vector<TwinRow> rows;  // one per recorded time, starting at t = 0
    double fitted_c = 0.0;      // log-linear fit of Y(t); 0 when Y stays ~0
    bool completed = false;
    RejectionReason reason = RejectionReason::None;
};

TwinRunResult twin_run(const VectorField& datum, const VectorField& perturbation, double kappa,
                       const EvolveConfig& cfg, const PoissonSolver& solver,
                       const CutoffPair& cutoffs);

// max over recorded times of LHS/RHS for each inequality; a ratio is only
// formed when the RHS exceeds 1e-14, and 0 is reported when it never does
struct DifferenceIdentityRatios {
    double e85 = 0.0;    // ||E||_{1.5+d}  vs  int ||V||_{1.5+d}
    double e86 = 0.0;    // ||chi^2 A||_{L2}  vs  ||chi E||_{1}
    double e87 = 0.0;    // ||A_t||_{0.5+d}  vs  ||V||_{1.5+d} + ||E||_{1.5+d}
    double e117a = 0.0;  // ||Q||_{1.5+d}  vs  Y + int Y
};
DifferenceIdentityRatios difference_identities(const TwinRunResult& run);

}  // namespace lelab
