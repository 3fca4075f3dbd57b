// lelab: experiment front end.
//   lelab <regularize|evolve|stability|mms|norms> --config <path>
//         [--preset <rest|shear|generic>] [--out <dir>]
// Exit codes: 0 success, 1 invariant failure, 2 config/usage error,
// 3 solver failure, 4 run rejected by an abort policy.
#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>

#include "lelab/checkpoint.hpp"
#include "lelab/config.hpp"
#include "lelab/csv.hpp"
#include "lelab/diagnostics.hpp"
#include "lelab/evolve.hpp"
#include "lelab/presets.hpp"
#include "lelab/regularize.hpp"
#include "lelab/stability.hpp"

namespace fs = std::filesystem;
using namespace lelab;

namespace {

struct Setup {
    GridPtr grid;
    PoissonSolver solver;
    CutoffPair cutoffs;
    VectorField datum;

    explicit Setup(const RunConfig& cfg)
        : grid(make_grid(cfg.n1, cfg.n2, cfg.n3)),
          solver(grid),
          cutoffs(CutoffPair::standard(grid, cfg.z_chi_lo, cfg.chi_width, cfg.z_psi_lo,
                                       cfg.psi_width)),
          datum(preset_datum(cfg.preset, grid)) {}
};

int run_regularize(const RunConfig& cfg, const fs::path& out) {
    Setup su(cfg);
    CsvWriter csv((out / "regularize.csv").string(), "lelab/regularize v1",
                  {"r", "datum_error", "curl_ratio", "div_residual"});
    bool invariants_ok = true;
    for (double r : cfg.r_sweep) {
        const RegularizationResult res =
            regularize_datum(su.datum, r, su.solver, su.cutoffs, cfg.delta);
        csv.row_doubles({res.r, res.datum_error, res.curl_ratio, res.div_residual});
        const bool ok = res.div_residual <= 1e-10 && res.bottom_bc_residual <= 1e-10;
        invariants_ok = invariants_ok && ok;
        std::cout << "r=" << res.r << " datum_error=" << res.datum_error
                  << " div=" << res.div_residual << (ok ? "" : "  [INVARIANT VIOLATION]")
                  << "\n";
    }
    return invariants_ok ? 0 : 1;
}

std::vector<double> report_cells(int step, const DiagnosticsReport& r) {
    return {static_cast<double>(step),
            r.t,
            r.det_dev,
            r.cauchy_l2,
            r.cauchy_ndelta,
            r.div_res,
            r.rt_margin,
            r.dev_a,
            r.dev_aat,
            r.dev_grad,
            r.eta_norm_25d,
            r.a_norm_15d,
            r.v_25d,
            r.q_25d,
            r.chi_q_3d,
            r.chi_eta_3d,
            r.psi_q_3d,
            r.boundary_energy,
            static_cast<double>(r.pressure_iterations),
            r.pressure_residual};
}

int run_evolve(const RunConfig& cfg, const fs::path& out) {
    Setup su(cfg);
    const EvolveConfig ecfg = cfg.evolve_config();
    CsvWriter csv((out / "trajectory.csv").string(), "lelab/trajectory v1",
                  {"step",      "t",          "det_dev",   "cauchy_l2", "cauchy_ndelta",
                   "div_res",   "rt_margin",  "dev_a",     "dev_aat",   "dev_grad",
                   "eta_25d",   "a_15d",      "v_25d",     "q_25d",     "chi_q_3d",
                   "chi_eta_3d", "psi_q_3d",  "boundary_energy", "press_iters",
                   "press_residual"});

    LagrangianState s = initial_state(su.datum, su.solver, ecfg);
    csv.row_doubles(report_cells(0, report(s, su.cutoffs, ecfg.b, ecfg.delta)));

    auto checkpoint_path = [&](int step) {
        char name[64];
        std::snprintf(name, sizeof(name), "checkpoint_%06d.bin", step);
        return (out / name).string();
    };
    if (cfg.checkpoint_interval > 0) save_checkpoint(checkpoint_path(0), s, cfg.delta, 0.0);

    const int nsteps = static_cast<int>(std::llround(cfg.t_end / cfg.dt));
    for (int n = 1; n <= nsteps; ++n) {
        StepOutcome o = step(s, ecfg, su.solver, su.cutoffs);
        if (!o.accepted) {
            std::cerr << "step " << n << " rejected: " << to_string(o.reason) << "\n";
            return o.reason == RejectionReason::PressureNonConvergence ? 3 : 4;
        }
        s = std::move(*o.state);
        csv.row_doubles(report_cells(n, o.report));
        if (cfg.checkpoint_interval > 0 && n % cfg.checkpoint_interval == 0)
            save_checkpoint(checkpoint_path(n), s, cfg.delta, 0.0);
    }
    std::cout << "evolved " << nsteps << " steps to t=" << s.t << "\n";
    return 0;
}

int run_stability(const RunConfig& cfg, const fs::path& out) {
    Setup su(cfg);
    const EvolveConfig ecfg = cfg.evolve_config();
    const VectorField pert = preset_perturbation(su.grid);
    const TwinRunResult res = twin_run(su.datum, pert, cfg.kappa, ecfg, su.solver, su.cutoffs);

    CsvWriter csv((out / "stability.csv").string(), "lelab/stability v1",
                  {"t", "Y", "q_diff_15d", "psi_q_diff_2d", "v_diff_l2"});
    for (const TwinRow& r : res.rows)
        csv.row_doubles({r.t, r.Y, r.q_diff_15d, r.psi_q_diff_2d, r.v_diff_l2});
    csv.comment("fitted_C = " + format_double(res.fitted_c));
    const DifferenceIdentityRatios ratios = difference_identities(res);
    csv.comment("ratio_e85 = " + format_double(ratios.e85));
    csv.comment("ratio_e86 = " + format_double(ratios.e86));
    csv.comment("ratio_e87 = " + format_double(ratios.e87));
    csv.comment("ratio_e117a = " + format_double(ratios.e117a));

    if (!res.completed) {
        std::cerr << "twin run rejected: " << to_string(res.reason) << "\n";
        return res.reason == RejectionReason::PressureNonConvergence ? 3 : 4;
    }
    std::cout << "fitted_C=" << res.fitted_c << "\n";
    return 0;
}

int run_mms(const RunConfig& cfg, const fs::path& out) {
    CsvWriter csv((out / "mms.csv").string(), "lelab/mms v1", {"n3", "max_error"});
    const double pi = std::numbers::pi;
    for (int n3 : {9, 17, 33}) {
        GridPtr grid = make_grid(cfg.n1, cfg.n2, n3);
        PoissonSolver solver(grid);
        ScalarField q_ex = ScalarField::from_function(grid, [&](double x1, double, double x3) {
            return std::cos(x1) * std::cos(pi * x3 / 2.0);
        });
        ScalarField rhs = -(1.0 + pi * pi / 4.0) * q_ex;
        MixedBVP bvp{std::move(rhs), BoundaryTrace(grid, Plane::Gamma1),
                     BoundaryTrace(grid, Plane::Gamma0)};
        const ScalarField q = solver.solve_constant_poisson(bvp);
        csv.row_doubles({static_cast<double>(n3), max_abs(q - q_ex)});
    }
    return 0;
}

int run_norms(const RunConfig& cfg, const fs::path& out) {
    Setup su(cfg);
    CsvWriter csv((out / "norms.csv").string(), "lelab/norms v1", {"quantity", "s", "value"});
    for (double s : {0.0, cfg.delta, 1.0 + cfg.delta, 1.5 + cfg.delta, 2.0 + cfg.delta,
                     2.5 + cfg.delta, 3.0 + cfg.delta, 4.0})
        csv.row({"aniso_norm_v0", format_double(s), format_double(aniso_norm(su.datum, s))});
    const double s = 2.5 + cfg.delta;
    const DivCurlDecomposition d = div_curl_decomposition(su.datum, s);
    csv.row({"div_curl_lhs", format_double(s), format_double(d.lhs)});
    csv.row({"div_curl_l2", format_double(s), format_double(d.l2)});
    csv.row({"div_curl_curl", format_double(s), format_double(d.curl)});
    csv.row({"div_curl_div", format_double(s), format_double(d.div)});
    csv.row({"div_curl_boundary", format_double(s), format_double(d.boundary)});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lelab: free-boundary Lagrangian Euler laboratory"};
    app.require_subcommand(1);

    std::string config_path, preset_override, out_dir = ".";
    for (const char* name : {"regularize", "evolve", "stability", "mms", "norms"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "run configuration file")->required();
        sub->add_option("--preset", preset_override, "override the configured preset");
        sub->add_option("--out", out_dir, "output directory");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = parse_config_file(config_path);
        if (!preset_override.empty()) {
            cfg.preset = preset_override;
            cfg.validate();
        }
        const fs::path out(out_dir);
        fs::create_directories(out);

        const std::string sub = app.get_subcommands().front()->get_name();
        if (sub == "regularize") return run_regularize(cfg, out);
        if (sub == "evolve") return run_evolve(cfg, out);
        if (sub == "stability") return run_stability(cfg, out);
        if (sub == "mms") return run_mms(cfg, out);
        if (sub == "norms") return run_norms(cfg, out);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
