// sobolev_norms: multiplier calculus, anisotropic norms, difference
// quotients, cutoffs, div-curl decomposition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lelab/presets.hpp"
#include "lelab/rng.hpp"
#include "lelab/sobolev.hpp"

using namespace lelab;

namespace {
constexpr double kPi = std::numbers::pi;
const double kDelta = 0.25;
}

TEST_CASE("lambda_power: single modes, identity, inverse pair, composition") {
    GridPtr g = make_grid(16, 16, 9);
    // single tangential mode times a vertical profile picks up one factor
    ScalarField f = ScalarField::from_function(g, [](double x1, double x2, double x3) {
        return std::cos(2.0 * x1 + x2) * (1.0 + x3);
    });
    CHECK(max_abs(lambda_power(f, 2.0) - 6.0 * f) <= 1e-12 * 6.0);

    Rng rng(5);
    ScalarField r = random_smooth_field(g, rng, 4, 3, 1.0);
    CHECK(max_abs(lambda_power(r, 0.0) - r) == 0.0);  // sigma = 0 short-circuits

    ScalarField pair = lambda_power(lambda_power(r, 1.5), -1.5);
    CHECK(max_abs(pair - r) <= 1e-12 * std::max(1.0, max_abs(r)));

    ScalarField ab = lambda_power(lambda_power(r, 0.8), 1.3);
    ScalarField apb = lambda_power(r, 2.1);
    CHECK(max_abs(ab - apb) <= 1e-11 * std::max(1.0, max_abs(apb)));
}

TEST_CASE("aniso_norm: closed forms and basic properties") {
    GridPtr g = make_grid(16, 16, 17);
    ScalarField cosx1 = ScalarField::from_function(
        g, [](double x1, double, double) { return std::cos(x1); });
    // ||cos x1||_L2 = pi sqrt(2); the x3-independence kills all d3 terms
    const double base = kPi * std::sqrt(2.0);
    for (double s : {0.0, 1.5 + kDelta, 2.5 + kDelta, 4.5}) {
        const double want = std::pow(2.0, s / 2.0) * base;
        CHECK(aniso_norm(cosx1, s) == doctest::Approx(want).epsilon(1e-10));
    }

    CHECK(aniso_norm(ScalarField(g, 0.0), 3.25) == 0.0);

    Rng rng(9);
    ScalarField f = random_smooth_field(g, rng, 4, 3, 1.0);
    CHECK(aniso_norm(f, 0.0) == doctest::Approx(l2_norm(f)).epsilon(1e-14));

    // monotone in s
    double prev = -1.0;
    for (double s : {0.0, 0.5, 1.0, 1.5 + kDelta, 2.0 + kDelta, 3.0, 4.0}) {
        const double n = aniso_norm(f, s);
        CHECK(n >= prev);
        prev = n;
    }

    GridPtr tiny = make_grid(8, 8, 5);
    CHECK_THROWS(aniso_norm(ScalarField(tiny, 1.0), 4.5));  // floor(s) > n3-2
}

TEST_CASE("cutoff pair: ordering and support constraints") {
    GridPtr g = make_grid(8, 8, 33);
    CutoffPair c = CutoffPair::standard(g);
    for (int j = 0; j < g->n3(); ++j) {
        const double chi = c.chi()(0, 0, j);
        const double psi = c.psi()(0, 0, j);
        CHECK(chi >= 0.0);
        CHECK(chi <= 1.0);
        CHECK(psi >= 0.0);
        CHECK(psi <= chi);            // psi <= chi everywhere
        if (psi > 0.0) CHECK(chi == 1.0);  // supp psi inside {chi = 1}
        if (g->x3(j) < 0.55) CHECK(chi == 0.0);  // vanish near Gamma_0
    }
    CHECK(c.psi()(0, 0, g->n3() - 1) == 1.0);  // psi = 1 at Gamma_1
    CHECK_THROWS(CutoffPair::standard(g, 0.6, 0.3, 0.7, 0.05));  // overlap
}

TEST_CASE("localized_norm: cutoff plateau and disjoint support") {
    GridPtr g = make_grid(16, 16, 33);
    CutoffPair c = CutoffPair::standard(g);

    // bump supported where chi = 1: localization is invisible
    ScalarField f = ScalarField::from_function(g, [](double x1, double, double x3) {
        return CutoffPair::smoothstep((x3 - 0.75) / 0.05) * std::cos(x1);
    });
    const double loc = localized_norm(f, c.chi(), 2.0 + kDelta);
    const double full = aniso_norm(f, 2.0 + kDelta);
    CHECK(loc == doctest::Approx(full).epsilon(1e-10));

    CHECK(localized_norm(ScalarField(g, 0.0), c.chi(), 1.0) == 0.0);

    // f vanishing on supp chi
    ScalarField low = ScalarField::from_function(g, [](double x1, double, double x3) {
        return CutoffPair::smoothstep((0.5 - x3) / 0.1) * std::sin(x1);
    });
    CHECK(localized_norm(low, c.chi(), 1.0) <= 1e-12);
}

TEST_CASE("shift: exactness, periodicity, isometry, commutation") {
    GridPtr g = make_grid(16, 16, 9);
    const QuotientSpec q{1, 0.37};

    CHECK(max_abs(shift(ScalarField(g, 2.0), q) - ScalarField(g, 2.0)) <= 1e-13);

    Rng rng(13);
    ScalarField f = random_smooth_field(g, rng, 4, 3, 1.0);
    CHECK(max_abs(shift(f, {1, 2.0 * kPi}) - f) <= 1e-12 * std::max(1.0, max_abs(f)));
    CHECK(l2_norm(shift(f, q)) == doctest::Approx(l2_norm(f)).epsilon(1e-12));

    // exact translation of a single mode
    ScalarField mode = ScalarField::from_function(
        g, [](double x1, double, double) { return std::sin(2.0 * x1); });
    ScalarField want = ScalarField::from_function(
        g, [&](double x1, double, double) { return std::sin(2.0 * (x1 + q.h)); });
    CHECK(max_abs(shift(mode, q) - want) <= 1e-12);

    // tangential multipliers commute
    ScalarField sd = shift(diff_quotient(f, {2, 0.01}), q);
    ScalarField ds = diff_quotient(shift(f, q), {2, 0.01});
    CHECK(max_abs(sd - ds) <= 1e-10 * std::max(1.0, max_abs(sd)));
    ScalarField sl = shift(lambda_power(f, 1.5), q);
    ScalarField ls = lambda_power(shift(f, q), 1.5);
    CHECK(max_abs(sl - ls) <= 1e-11 * std::max(1.0, max_abs(sl)));
}

TEST_CASE("diff_quotient: Taylor bound, constants, product rule") {
    // products of kmax-limited factors must stay strictly below the
    // Nyquist mode for the shifts to be exact translations
    GridPtr g = make_grid(32, 32, 9);
    const double h = 1e-3;
    ScalarField sinx = ScalarField::from_function(
        g, [](double x1, double, double) { return std::sin(x1); });
    ScalarField cosx = ScalarField::from_function(
        g, [](double x1, double, double) { return std::cos(x1); });
    // |D sin - cos| <= h/2 sup|f''| = h/2
    CHECK(max_abs(diff_quotient(sinx, {1, h}) - cosx) <= h / 2.0 * 1.0001);

    CHECK(max_abs(diff_quotient(ScalarField(g, 7.0), {1, 0.1})) <= 1e-12);

    // product rule D(fg) = Df tau(g) + f Dg, exact for resolved products
    Rng rng(17);
    for (int dir = 1; dir <= 2; ++dir) {
        ScalarField f = random_smooth_field(g, rng, 4, 3, 1.0);
        ScalarField gg = random_smooth_field(g, rng, 4, 3, 1.0);
        const QuotientSpec qs{dir, 0.05};
        ScalarField lhs = diff_quotient(multiply(f, gg), qs);
        ScalarField rhs = multiply(diff_quotient(f, qs), shift(gg, qs)) +
                          multiply(f, diff_quotient(gg, qs));
        const double scale = std::max(1.0, max_abs(lhs));
        CHECK(max_abs(lhs - rhs) <= 1e-12 * scale);
    }

    // D converges to the tangential derivative at first order
    Rng rng2(19);
    ScalarField f = random_smooth_field(g, rng2, 3, 3, 1.0);
    ScalarField d = tangential_derivative(f, 1);
    const double e1 = max_abs(diff_quotient(f, {1, 0.02}) - d);
    const double e2 = max_abs(diff_quotient(f, {1, 0.01}) - d);
    CHECK(e2 <= 0.65 * e1);  // ~ halves with h
}

TEST_CASE("div_curl_decomposition: structure and special fields") {
    GridPtr g = make_grid(16, 16, 17);
    const double s = 2.5 + kDelta;

    DivCurlDecomposition z = div_curl_decomposition(VectorField(g, 0.0), s);
    CHECK(z.lhs == 0.0);
    CHECK(z.l2 == 0.0);
    CHECK(z.curl == 0.0);
    CHECK(z.div == 0.0);
    CHECK(z.boundary == 0.0);

    // f = (sin x2, 0, 0) is divergence-free
    VectorField f(g, 0.0);
    f.c[0] = ScalarField::from_function(
        g, [](double, double x2, double) { return std::sin(x2); });
    DivCurlDecomposition d = div_curl_decomposition(f, s);
    CHECK(d.div <= 1e-12);
    CHECK(d.curl > 0.1);

    // constant fields: N_s equals the L2 term, all other terms vanish
    VectorField c(g, 0.0);
    c.c[2] = ScalarField(g, 0.7);
    DivCurlDecomposition dc = div_curl_decomposition(c, s);
    CHECK(dc.lhs == doctest::Approx(dc.l2).epsilon(1e-12));
    CHECK(dc.curl <= 1e-10);
    CHECK(dc.div <= 1e-10);
    CHECK(dc.boundary <= 1e-10);

    CHECK_THROWS(div_curl_decomposition(f, 0.5));  // s >= 1 required

    // empirical control constant over random fields
    Rng rng(23);
    double fitted = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        VectorField w = random_smooth_vector(g, rng, 4, 4, 1.0);
        DivCurlDecomposition dd = div_curl_decomposition(w, s);
        const double rhs = dd.l2 + dd.curl + dd.div + dd.boundary;
        REQUIRE(rhs > 0.0);
        fitted = std::max(fitted, dd.lhs / rhs);
    }
    CHECK(std::isfinite(fitted));
    CHECK(fitted > 0.0);
    MESSAGE("fitted div-curl constant over 10 fields: ", fitted);
}
