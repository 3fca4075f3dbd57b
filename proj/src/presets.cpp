#include "lelab/presets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lelab {

namespace {
constexpr double kPi = std::numbers::pi;
}

VectorField preset_datum(const std::string& name, const GridPtr& grid) {
    if (name == "rest") return VectorField(grid, 0.0);

    if (name == "shear") {
        VectorField v(grid, 0.0);
        v.c[0] = ScalarField::from_function(
            grid, [](double, double, double x3) { return std::sin(kPi * x3 / 2.0); });
        return v;
    }

    if (name == "generic") {
        // curl of (A1 f(x3) sin x2, A2 g(x3) sin x1, 0) + weak shear;
        // f(0) = g(0) = 0 keeps the third component zero on Gamma_0
        const double A1 = 0.04, A2 = 0.05, c = 0.08;
        auto f = [](double x3) { return std::sin(kPi * x3 / 2.0); };
        auto fp = [](double x3) { return (kPi / 2.0) * std::cos(kPi * x3 / 2.0); };
        auto g = [](double x3) { return 0.5 * std::sin(kPi * x3); };
        auto gp = [](double x3) { return 0.5 * kPi * std::cos(kPi * x3); };
        VectorField v(grid, 0.0);
        v.c[0] = ScalarField::from_function(grid, [&](double x1, double, double x3) {
            return -A2 * gp(x3) * std::sin(x1) + c * f(x3);
        });
        v.c[1] = ScalarField::from_function(grid, [&](double, double x2, double x3) {
            return A1 * fp(x3) * std::sin(x2);
        });
        v.c[2] = ScalarField::from_function(grid, [&](double x1, double x2, double x3) {
            return A2 * g(x3) * std::cos(x1) - A1 * f(x3) * std::cos(x2);
        });
        return v;
    }

    throw std::invalid_argument("unknown preset '" + name + "'");
}

VectorField preset_perturbation(const GridPtr& grid) {
    // curl of (B1 p(x3) cos x2, B2 q(x3) cos x1, 0), p(0) = q(0) = 0
    const double B1 = 1.0, B2 = 0.8;
    auto p = [](double x3) { return 1.0 - std::cos(kPi * x3); };
    auto pp = [](double x3) { return kPi * std::sin(kPi * x3); };
    auto q = [](double x3) { return x3 * x3; };
    auto qp = [](double x3) { return 2.0 * x3; };
    VectorField v(grid, 0.0);
    v.c[0] = ScalarField::from_function(
        grid, [&](double x1, double, double x3) { return -B2 * qp(x3) * std::cos(x1); });
    v.c[1] = ScalarField::from_function(
        grid, [&](double, double x2, double x3) { return B1 * pp(x3) * std::cos(x2); });
    v.c[2] = ScalarField::from_function(grid, [&](double x1, double x2, double x3) {
        return -B2 * q(x3) * std::sin(x1) + B1 * p(x3) * std::sin(x2);
    });
    return v;
}

ScalarField random_smooth_field(const GridPtr& grid, Rng& rng, int kmax, int vdeg,
                                double amplitude) {
    struct Mode {
        double k1, k2, amp, phase;
        std::vector<double> poly;
    };
    std::vector<Mode> modes;
    const double k0 = std::max(1.0, kmax / 1.5);
    for (int k1 = -kmax; k1 <= kmax; ++k1)
        for (int k2 = 0; k2 <= kmax; ++k2) {
            if (k2 == 0 && k1 < 0) continue;  // conjugate of a kept mode
            Mode m;
            m.k1 = k1;
            m.k2 = k2;
            m.amp = amplitude * std::exp(-(k1 * k1 + k2 * k2) / (k0 * k0)) * rng.gauss();
            m.phase = rng.uniform(0.0, 2.0 * kPi);
            m.poly.resize(vdeg + 1);
            for (int d = 0; d <= vdeg; ++d) m.poly[d] = rng.uniform(-1.0, 1.0) / (d + 1.0);
            modes.push_back(std::move(m));
        }
    return ScalarField::from_function(grid, [modes](double x1, double x2, double x3) {
        double acc = 0.0;
        for (const auto& m : modes) {
            double poly = 0.0;
            for (std::size_t d = m.poly.size(); d-- > 0;) poly = poly * x3 + m.poly[d];
            acc += m.amp * std::cos(m.k1 * x1 + m.k2 * x2 + m.phase) * poly;
        }
        return acc;
    });
}

VectorField random_smooth_vector(const GridPtr& grid, Rng& rng, int kmax, int vdeg,
                                 double amplitude) {
    VectorField v;
    for (int i = 0; i < 3; ++i) v.c[i] = random_smooth_field(grid, rng, kmax, vdeg, amplitude);
    return v;
}

}  // namespace lelab
