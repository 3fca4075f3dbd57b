#include "lelab/elliptic.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lelab/fourier.hpp"
#include "lelab/kernels.hpp"
#include "lelab/parallel.hpp"
#include "lelab/sobolev.hpp"

namespace lelab {

struct PoissonSolver::Impl {
    std::vector<Eigen::PartialPivLU<Eigen::MatrixXd>> lu;  // one per stored mode
};

PoissonSolver::PoissonSolver(GridPtr grid) : grid_(std::move(grid)), impl_(new Impl) {
    const Grid& g = *grid_;
    const int n3 = g.n3();

    Eigen::MatrixXd d1(n3, n3);
    for (int i = 0; i < n3; ++i)
        for (int j = 0; j < n3; ++j) d1(i, j) = g.d1(i, j);
    const Eigen::MatrixXd d2 = d1 * d1;

    impl_->lu.resize(g.spectral_plane_size());
    for (int i1 = 0; i1 < g.n1(); ++i1) {
        for (int i2 = 0; i2 < g.spectral_cols(); ++i2) {
            const double k1 = g.k1(i1), k2 = g.k2(i2);
            Eigen::MatrixXd A = d2;
            A.diagonal().array() -= k1 * k1 + k2 * k2;
            A.row(0) = d1.row(0);    // Neumann row on Gamma_0
            A.row(n3 - 1).setZero();  // Dirichlet row on Gamma_1
            A(n3 - 1, n3 - 1) = 1.0;
            auto& lu = impl_->lu[i1 * g.spectral_cols() + i2];
            lu.compute(A);
            // mixed Dirichlet/Neumann rows make every mode nonsingular,
            // including k = 0; a singular factor here signals a grid bug
            if (!(std::abs(lu.determinant()) > 0.0))
                throw std::runtime_error("PoissonSolver: singular mode system");
        }
    }
}

PoissonSolver::~PoissonSolver() = default;
PoissonSolver::PoissonSolver(PoissonSolver&&) noexcept = default;
PoissonSolver& PoissonSolver::operator=(PoissonSolver&&) noexcept = default;

ScalarField PoissonSolver::solve_constant_poisson(const MixedBVP& bvp) const {
    const Grid& g = *grid_;
    if (!bvp.rhs.grid().same_as(g)) throw std::invalid_argument("solve: rhs grid mismatch");
    if (bvp.dirichlet_top.which() != Plane::Gamma1 ||
        bvp.neumann_bottom.which() != Plane::Gamma0)
        throw std::invalid_argument("solve: traces on wrong planes");

    const int n3 = g.n3();
    const std::size_t spp = g.spectral_plane_size();

    std::vector<std::complex<double>> rhs_hat(g.spectral_size());
    fourier::forward(g, bvp.rhs.data(), rhs_hat.data());
    std::vector<std::complex<double>> dir_hat(spp), neu_hat(spp);
    fourier::forward_plane(g, bvp.dirichlet_top.data(), dir_hat.data());
    fourier::forward_plane(g, bvp.neumann_bottom.data(), neu_hat.data());

    std::vector<std::complex<double>> sol_hat(g.spectral_size());
    parallel_for(static_cast<int>(spp), [&](int mode) {
        Eigen::VectorXd br(n3), bi(n3);
        for (int j = 0; j < n3; ++j) {
            const std::complex<double> r = rhs_hat[j * spp + mode];
            br(j) = r.real();
            bi(j) = r.imag();
        }
        br(0) = neu_hat[mode].real();
        bi(0) = neu_hat[mode].imag();
        br(n3 - 1) = dir_hat[mode].real();
        bi(n3 - 1) = dir_hat[mode].imag();
        const auto& lu = impl_->lu[mode];
        const Eigen::VectorXd ur = lu.solve(br);
        const Eigen::VectorXd ui = lu.solve(bi);
        for (int j = 0; j < n3; ++j) sol_hat[j * spp + mode] = {ur(j), ui(j)};
    });

    ScalarField out(grid_);
    fourier::inverse(g, sol_hat.data(), out.data());
    return out;
}

std::pair<ScalarField, PressureSolveReport> PoissonSolver::solve_pressure(
    const LagrangianState& s, double tol, int max_iter) const {
    // stationary data of the iteration
    const Tensor33 grad_v = grad_tensor(s.v);
    const Tensor33 a_t = cofactor_rate(s.grad_eta, grad_v);
    const ScalarField source = dealias(double_contract(a_t, grad_v));
    const Tensor33 pert = identity_minus(mat_times_own_transpose(s.a));  // I - a a^T

    ScalarField q(grid_, 0.0);
    PressureSolveReport rep;
    double prev_dist = -1.0;
    const double blowup_guard = 1e8 * (1.0 + l2_norm(source));

    for (int m = 0; m < max_iter; ++m) {
        const VectorField grad_q = gradient(q);

        ScalarField rhs = source;
        for (int j = 0; j < 3; ++j) {
            ScalarField gj = multiply(pert.m[j][0], grad_q.c[0]);
            gj += multiply(pert.m[j][1], grad_q.c[1]);
            gj += multiply(pert.m[j][2], grad_q.c[2]);
            rhs += derivative(dealias(gj), j + 1);
        }
        rhs = dealias(rhs);

        // Gamma_0 Neumann datum (delta_k3 - a_k3) d_k q, lagged through q^(m)
        ScalarField neu_field = grad_q.c[2] - multiply(s.a.m[0][2], grad_q.c[0]);
        neu_field -= multiply(s.a.m[1][2], grad_q.c[1]);
        neu_field -= multiply(s.a.m[2][2], grad_q.c[2]);
        MixedBVP bvp{std::move(rhs), BoundaryTrace(grid_, Plane::Gamma1),
                     restrict_to(neu_field, Plane::Gamma0)};

        ScalarField q_next = solve_constant_poisson(bvp);
        const double dist = aniso_norm(q_next - q, 1.0);
        q = std::move(q_next);

        rep.iterations = m + 1;
        rep.final_residual = dist;
        if (prev_dist > 0.0) rep.contraction_estimate = dist / prev_dist;
        prev_dist = dist;

        if (dist <= tol) {
            rep.converged = true;
            break;
        }
        if (!std::isfinite(dist) || dist > blowup_guard) break;  // left the regime
    }
    return {std::move(q), rep};
}

std::pair<ScalarField, BoundaryTrace> PoissonSolver::solve_initial_pressure(
    const VectorField& v0) const {
    const Tensor33 gv = grad_tensor(v0);
    ScalarField rhs(grid_, 0.0);  // -d_i v_j d_j v_i
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            kernels::ops().mul_sub(rhs.data(), gv.m[i][j].data(), gv.m[j][i].data(), rhs.size());
    rhs = dealias(rhs);

    MixedBVP bvp{std::move(rhs), BoundaryTrace(grid_, Plane::Gamma1),
                 BoundaryTrace(grid_, Plane::Gamma0)};
    ScalarField q0 = solve_constant_poisson(bvp);
    BoundaryTrace dq3 = restrict_to(vertical_derivative(q0), Plane::Gamma1);
    return {std::move(q0), std::move(dq3)};
}

}  // namespace lelab
