#include "lelab/sobolev.hpp"

#include <cmath>
#include <stdexcept>

namespace lelab {

double CutoffPair::smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

CutoffPair CutoffPair::standard(GridPtr grid, double z_chi_lo, double chi_width,
                                double z_psi_lo, double psi_width) {
    if (!(z_chi_lo > 0.0 && z_psi_lo > z_chi_lo + chi_width && z_psi_lo + psi_width < 1.0))
        throw std::invalid_argument("CutoffPair: need 0 < chi transition < psi transition < 1");
    CutoffPair p;
    p.z_chi_lo_ = z_chi_lo;
    p.z_psi_lo_ = z_psi_lo;
    p.chi_ = ScalarField::from_function(grid, [&](double, double, double x3) {
        return smoothstep((x3 - z_chi_lo) / chi_width);
    });
    p.psi_ = ScalarField::from_function(grid, [&](double, double, double x3) {
        return smoothstep((x3 - z_psi_lo) / psi_width);
    });
    return p;
}

ScalarField lambda_power(const ScalarField& f, double sigma) {
    if (sigma == 0.0) return f;
    return apply_real_multiplier(f, [sigma](int k1, int k2) {
        return std::pow(1.0 + static_cast<double>(k1) * k1 + static_cast<double>(k2) * k2,
                        sigma / 2.0);
    });
}

double aniso_norm(const ScalarField& f, double s) {
    if (s < 0.0) throw std::invalid_argument("aniso_norm: s must be nonnegative");
    const int jmax = static_cast<int>(std::floor(s));
    if (jmax > f.grid().n3() - 2)
        throw std::invalid_argument(
            "aniso_norm: vertical resolution insufficient for requested index");
    double acc = 0.0;
    ScalarField g = f;
    for (int j = 0;; ++j) {
        const double n = l2_norm(lambda_power(g, s - j));
        acc += n * n;
        if (j == jmax) break;
        g = vertical_derivative(g);
    }
    return std::sqrt(acc);
}

double aniso_norm(const VectorField& f, double s) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double n = aniso_norm(f.c[i], s);
        acc += n * n;
    }
    return std::sqrt(acc);
}

double localized_norm(const ScalarField& f, const ScalarField& cutoff, double s) {
    return aniso_norm(multiply_dealiased(cutoff, f), s);
}

double localized_norm(const VectorField& f, const ScalarField& cutoff, double s) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double n = localized_norm(f.c[i], cutoff, s);
        acc += n * n;
    }
    return std::sqrt(acc);
}

namespace {

// exp(i k h) with the real-field convention cos(k h) at the Nyquist mode
std::complex<double> shift_factor(int k, int n, double h) {
    if (2 * std::abs(k) == n) return {std::cos(k * h), 0.0};
    return {std::cos(k * h), std::sin(k * h)};
}

}  // namespace

ScalarField shift(const ScalarField& f, const QuotientSpec& q) {
    if (q.direction != 1 && q.direction != 2)
        throw std::invalid_argument("shift: tangential directions only");
    const int n = (q.direction == 1) ? f.grid().n1() : f.grid().n2();
    const double h = q.h;
    const int dir = q.direction;
    return apply_complex_multiplier(f, [&](int k1, int k2) {
        return shift_factor(dir == 1 ? k1 : k2, n, h);
    });
}

ScalarField diff_quotient(const ScalarField& f, const QuotientSpec& q) {
    if (q.direction != 1 && q.direction != 2)
        throw std::invalid_argument("diff_quotient: tangential directions only");
    const int n = (q.direction == 1) ? f.grid().n1() : f.grid().n2();
    const double h = q.h;
    const int dir = q.direction;
    return apply_complex_multiplier(f, [&](int k1, int k2) {
        return (shift_factor(dir == 1 ? k1 : k2, n, h) - 1.0) / h;
    });
}

VectorField shift(const VectorField& f, const QuotientSpec& q) {
    VectorField r;
    for (int i = 0; i < 3; ++i) r.c[i] = shift(f.c[i], q);
    return r;
}

VectorField diff_quotient(const VectorField& f, const QuotientSpec& q) {
    VectorField r;
    for (int i = 0; i < 3; ++i) r.c[i] = diff_quotient(f.c[i], q);
    return r;
}

DivCurlDecomposition div_curl_decomposition(const VectorField& f, double s) {
    if (s < 1.0) throw std::invalid_argument("div_curl_decomposition: s >= 1 required");
    DivCurlDecomposition d;
    d.lhs = aniso_norm(f, s);
    d.l2 = l2_norm(f);
    d.curl = aniso_norm(curl(f), s - 1.0);
    d.div = aniso_norm(divergence(f), s - 1.0);
    double acc = 0.0;
    for (Plane p : {Plane::Gamma0, Plane::Gamma1})
        for (int l = 1; l <= 2; ++l)
            for (int i = 0; i < 3; ++i) {
                const double n =
                    trace_sobolev_norm(restrict_to(tangential_derivative(f.c[i], l), p), s - 1.5);
                acc += n * n;
            }
    d.boundary = std::sqrt(acc);
    return d;
}

}  // namespace lelab
