// lagrangian_state: cofactor algebra and the structural identities. The
// cofactor convention here: sum_i a(i,j) d_i eta_k = det(grad eta) delta_jk,
// i.e. the first index pairs with the derivative index, which is the index
// pattern every identity below uses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lelab/presets.hpp"
#include "lelab/rng.hpp"
#include "lelab/sobolev.hpp"
#include "lelab/state.hpp"

using namespace lelab;

namespace {

constexpr double kPi = std::numbers::pi;

// eta = x + eps * smooth displacement with vertical polynomial profiles;
// products stay fully resolved so the algebraic identities hold to rounding
LagrangianState random_state(GridPtr g, Rng& rng, double eps, double t = 0.3) {
    VectorField d = random_smooth_vector(g, rng, 3, 3, eps);
    VectorField v = random_smooth_vector(g, rng, 3, 3, 0.5);
    VectorField omega0 = curl(v);
    return assemble_state(t, std::move(d), std::move(v), ScalarField(g, 0.0),
                          std::move(omega0));
}

ScalarField contract_cols(const Tensor33& a, const Tensor33& m, int j, int k) {
    // sum_i a(i,j) m(i,k)
    ScalarField e = multiply(a.m[0][j], m.m[0][k]);
    e += multiply(a.m[1][j], m.m[1][k]);
    e += multiply(a.m[2][j], m.m[2][k]);
    return e;
}

}  // namespace

TEST_CASE("cofactor: identity map") {
    GridPtr g = make_grid(8, 8, 9);
    Tensor33 m = grad_eta_from_displacement(VectorField(g, 0.0));
    Tensor33 a = cofactor(m);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(max_abs(a.m[i][j] - ScalarField(g, i == j ? 1.0 : 0.0)) == 0.0);
    CHECK(max_abs(jacobian_det(m) - ScalarField(g, 1.0)) == 0.0);
}

TEST_CASE("cofactor: diagonal hand-evaluated case") {
    GridPtr g = make_grid(8, 8, 9);
    Tensor33 m;
    const double d[3] = {2.0, 3.0, 1.0 / 6.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.m[i][j] = ScalarField(g, i == j ? d[i] : 0.0);
    Tensor33 a = cofactor(m);
    const double want[3] = {0.5, 1.0 / 3.0, 6.0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double expect = (i == j) ? want[i] : 0.0;
            CHECK(max_abs(a.m[i][j] - ScalarField(g, expect)) <= 1e-15 * std::abs(want[i]));
        }
    CHECK(max_abs(jacobian_det(m) - ScalarField(g, 1.0)) <= 1e-15);
}

TEST_CASE("cofactor: shear map has the analytic inverse") {
    GridPtr g = make_grid(8, 8, 33);
    const double t = 0.35;
    VectorField d(g, 0.0);
    d.c[0] = ScalarField::from_function(
        g, [&](double, double, double x3) { return t * std::sin(kPi * x3 / 2.0); });
    Tensor33 m = grad_eta_from_displacement(d);
    Tensor33 a = cofactor(m);

    ScalarField want = ScalarField::from_function(g, [&](double, double, double x3) {
        return -t * (kPi / 2.0) * std::cos(kPi * x3 / 2.0);
    });
    CHECK(max_abs(a.m[0][2] - want) <= 1e-10);  // a = I - t U' e1 (x) e3
    for (int i = 0; i < 3; ++i)
        CHECK(max_abs(a.m[i][i] - ScalarField(g, 1.0)) <= 1e-10);

    // unit determinant, exactly triangular
    CHECK(max_abs(jacobian_det(m) - ScalarField(g, 1.0)) <= 1e-12);
}

TEST_CASE("a grad_eta = det I and Piola on random smooth maps") {
    GridPtr g = make_grid(16, 16, 17);
    Rng rng(101);
    for (int trial = 0; trial < 5; ++trial) {
        LagrangianState s = random_state(g, rng, 0.05);
        const ScalarField det = jacobian_det(s.grad_eta);
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                ScalarField prod = contract_cols(s.a, s.grad_eta, j, k);
                if (j == k) prod -= det;
                CHECK(max_abs(prod) <= 1e-10);
            }
        CHECK(max_abs(piola_residual(s.a)) <= 1e-9);
    }
}

TEST_CASE("Gamma_0 rows of the cofactor vanish when eta_3 = x_3 there") {
    GridPtr g = make_grid(16, 16, 17);
    Rng rng(103);
    VectorField d = random_smooth_vector(g, rng, 3, 3, 0.05);
    // force the third displacement component to vanish at x3 = 0
    d.c[2] = multiply(d.c[2], ScalarField::from_function(
                                  g, [](double, double, double x3) { return x3; }));
    Tensor33 a = cofactor(grad_eta_from_displacement(d));
    for (int i = 0; i < 2; ++i)
        CHECK(trace_max_abs(restrict_to(a.m[2][i], Plane::Gamma0)) <= 1e-13);
}

TEST_CASE("cofactor_rate matches a time difference of cofactors") {
    GridPtr g = make_grid(12, 12, 13);
    Rng rng(107);
    VectorField d = random_smooth_vector(g, rng, 3, 3, 0.05);
    VectorField v = random_smooth_vector(g, rng, 3, 3, 0.4);
    const Tensor33 h = grad_eta_from_displacement(d);
    const Tensor33 gv = grad_tensor(v);
    const Tensor33 rate = cofactor_rate(h, gv);

    const double dt = 1e-6;
    VectorField d2 = d;
    d2.axpy(dt, v);
    const Tensor33 h2 = grad_eta_from_displacement(d2);
    const Tensor33 a1 = cofactor(h), a2 = cofactor(h2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            ScalarField fd = 1.0 / dt * (a2.m[i][j] - a1.m[i][j]);
            CHECK(max_abs(fd - rate.m[i][j]) <= 1e-5);  // O(dt) difference error
        }
}

TEST_CASE("Cauchy invariance residual: t = 0 and the shear solution") {
    GridPtr g = make_grid(16, 16, 33);
    Rng rng(109);
    VectorField v = random_smooth_vector(g, rng, 3, 3, 0.6);
    LagrangianState s0 = assemble_state(0.0, VectorField(g, 0.0), v, ScalarField(g, 0.0),
                                        curl(v));
    CHECK(max_abs(cauchy_invariance_residual(s0)) == 0.0);  // identical code path to curl

    // v = 0, eta = x, omega0 = 0
    LagrangianState rest = assemble_state(0.0, VectorField(g, 0.0), VectorField(g, 0.0),
                                          ScalarField(g, 0.0), VectorField(g, 0.0));
    CHECK(max_abs(cauchy_invariance_residual(rest)) == 0.0);

    // exact shear solution at t > 0 satisfies the invariance identically
    const double t = 0.4;
    VectorField vs(g, 0.0);
    vs.c[0] = ScalarField::from_function(
        g, [](double, double, double x3) { return std::sin(kPi * x3 / 2.0); });
    VectorField d(g, 0.0);
    d.c[0] = t * vs.c[0];
    LagrangianState shear = assemble_state(t, d, vs, ScalarField(g, 0.0), curl(vs));
    CHECK(max_abs(cauchy_invariance_residual(shear)) <= 1e-10);
    CHECK(max_abs(lagrangian_divergence(shear)) <= 1e-10);
}

TEST_CASE("both residual routes agree") {
    GridPtr g = make_grid(16, 16, 17);
    Rng rng(113);
    for (int trial = 0; trial < 5; ++trial) {
        LagrangianState s = random_state(g, rng, 0.06);
        const VectorField r1 = cauchy_invariance_residual(s);
        const VectorField r2 = curl_identity_residual(s);
        const double scale = std::max(1.0, max_abs(r1));
        CHECK(max_abs(r1 - r2) <= 1e-12 * scale);
    }
}

TEST_CASE("lagrangian divergence: rest and regularized-datum reduction") {
    GridPtr g = make_grid(16, 16, 17);
    LagrangianState rest = assemble_state(0.0, VectorField(g, 0.0), VectorField(g, 0.0),
                                          ScalarField(g, 0.0), VectorField(g, 0.0));
    CHECK(max_abs(lagrangian_divergence(rest)) == 0.0);

    // at t = 0 the Lagrangian divergence is the ordinary divergence
    VectorField v = preset_datum("generic", g);
    LagrangianState s0 = assemble_state(0.0, VectorField(g, 0.0), v, ScalarField(g, 0.0),
                                        curl(v));
    CHECK(max_abs(lagrangian_divergence(s0) - divergence(v)) <= 1e-12);
    CHECK(l2_norm(lagrangian_divergence(s0)) <= 1e-10);  // preset is solenoidal
}
