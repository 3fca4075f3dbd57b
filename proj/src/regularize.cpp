#include "lelab/regularize.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lelab/kernels.hpp"
#include "lelab/parallel.hpp"

namespace lelab {

namespace {

// barycentric weights of the Chebyshev-Lobatto nodes: (-1)^j, halved ends
std::vector<double> bary_weights(int n3) {
    std::vector<double> w(n3);
    for (int j = 0; j < n3; ++j) w[j] = (j % 2 == 0) ? 1.0 : -1.0;
    w[0] *= 0.5;
    w[n3 - 1] *= 0.5;
    return w;
}

// row of interpolation coefficients at height y in [0,1]
std::vector<double> bary_row(const Grid& g, double y) {
    const int n3 = g.n3();
    const std::vector<double> w = bary_weights(n3);
    std::vector<double> row(n3, 0.0);
    for (int j = 0; j < n3; ++j) {
        if (std::abs(y - g.x3(j)) < 1e-14) {
            row[j] = 1.0;
            return row;
        }
    }
    double denom = 0.0;
    for (int j = 0; j < n3; ++j) {
        row[j] = w[j] / (y - g.x3(j));
        denom += row[j];
    }
    for (int j = 0; j < n3; ++j) row[j] /= denom;
    return row;
}

// scaled-reflection extension coefficients: sum_m c_m (-1/m)^p = 1, p=0..3,
// so the extension matches value and first three derivatives at the face
const std::array<double, 4>& hestenes_coeffs() {
    static const std::array<double, 4> c = [] {
        Eigen::Matrix4d V;
        Eigen::Vector4d rhs;
        for (int p = 0; p < 4; ++p) {
            rhs(p) = 1.0;
            for (int m = 1; m <= 4; ++m) V(p, m - 1) = std::pow(-1.0 / m, p);
        }
        const Eigen::Vector4d sol = V.partialPivLu().solve(rhs);
        return std::array<double, 4>{sol(0), sol(1), sol(2), sol(3)};
    }();
    return c;
}

// evaluation row for y in [-1, 2]: interpolation inside [0,1], C^3
// scaled-reflection extension outside
std::vector<double> eval_row(const Grid& g, double y) {
    if (y >= 0.0 && y <= 1.0) return bary_row(g, y);
    const auto& c = hestenes_coeffs();
    std::vector<double> row(g.n3(), 0.0);
    for (int m = 1; m <= 4; ++m) {
        const double ym = (y < 0.0) ? -y / m : 1.0 - (y - 1.0) / m;
        const std::vector<double> sub = bary_row(g, ym);
        for (int j = 0; j < g.n3(); ++j) row[j] += c[m - 1] * sub[j];
    }
    return row;
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton on the Legendre recurrence
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
}

struct QuadratureRule {
    std::vector<double> s;   // nodes in [-r, r]
    std::vector<double> wq;  // weights
};

// composite 8x16 Gauss-Legendre on [-r, r]; the bump vanishes to all
// orders at the ends so the rule converges superalgebraically
QuadratureRule bump_rule(double r) {
    static std::vector<double> gx, gw;
    if (gx.empty()) gauss_legendre(16, gx, gw);
    QuadratureRule q;
    const int panels = 8;
    for (int p = 0; p < panels; ++p) {
        const double a = -r + 2.0 * r * p / panels;
        const double b = -r + 2.0 * r * (p + 1) / panels;
        for (std::size_t i = 0; i < gx.size(); ++i) {
            q.s.push_back(0.5 * (a + b) + 0.5 * (b - a) * gx[i]);
            q.wq.push_back(0.5 * (b - a) * gw[i]);
        }
    }
    return q;
}

double bump(double t, double r) {
    const double u = t / r;
    if (std::abs(u) >= 1.0) return 0.0;
    return std::exp(-1.0 / (1.0 - u * u));
}

double bump_mass(double r, const QuadratureRule& q) {
    double m = 0.0;
    for (std::size_t i = 0; i < q.s.size(); ++i) m += q.wq[i] * bump(q.s[i], r);
    return m;
}

}  // namespace

ScalarField resample_vertical(const ScalarField& f, const std::vector<double>& targets) {
    const Grid& g = f.grid();
    if (static_cast<int>(targets.size()) != g.n3())
        throw std::invalid_argument("resample_vertical: one target per output plane");
    ScalarField out(f.grid_ptr());
    parallel_for(g.n3(), [&](int j) {
        const std::vector<double> row = bary_row(g, targets[j]);
        double* oj = out.plane(j);
        for (int k = 0; k < g.n3(); ++k)
            if (row[k] != 0.0) kernels::ops().axpy(oj, row[k], f.plane(k), g.plane_size());
    });
    return out;
}

ScalarField resample_vertical(const ScalarField& f, double y) {
    return resample_vertical(f, std::vector<double>(f.grid().n3(), y));
}

VectorField shift_rescale(const VectorField& v0, double r) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("shift_rescale: r in (0,1]");
    const Grid& g = v0.grid();
    std::vector<double> targets(g.n3());
    for (int j = 0; j < g.n3(); ++j) targets[j] = (g.x3(j) + r) / (1.0 + 2.0 * r);
    VectorField out;
    for (int i = 0; i < 3; ++i) out.c[i] = resample_vertical(v0.c[i], targets);
    out.c[2] *= 1.0 / (1.0 + 2.0 * r);
    return out;
}

double mollifier_multiplier(double k, double r) {
    const QuadratureRule q = bump_rule(r);
    const double mass = bump_mass(r, q);
    double acc = 0.0;
    for (std::size_t i = 0; i < q.s.size(); ++i)
        acc += q.wq[i] * bump(q.s[i], r) * std::cos(k * q.s[i]);
    return acc / mass;
}

ScalarField mollify(const ScalarField& f, double r) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("mollify: r in (0,1]");
    const Grid& g = f.grid();

    const QuadratureRule q = bump_rule(r);
    const double mass = bump_mass(r, q);

    // tangential: exact multiplier of the 1-D bump in each direction
    std::vector<double> m1(g.n1() / 2 + 1), m2(g.n2() / 2 + 1);
    for (std::size_t k = 0; k < m1.size(); ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < q.s.size(); ++i)
            acc += q.wq[i] * bump(q.s[i], r) * std::cos(static_cast<double>(k) * q.s[i]);
        m1[k] = acc / mass;
    }
    for (std::size_t k = 0; k < m2.size(); ++k) {
        double acc = 0.0;
        for (std::size_t i = 0; i < q.s.size(); ++i)
            acc += q.wq[i] * bump(q.s[i], r) * std::cos(static_cast<double>(k) * q.s[i]);
        m2[k] = acc / mass;
    }
    ScalarField tang = apply_real_multiplier(
        f, [&](int k1, int k2) { return m1[std::abs(k1)] * m2[std::abs(k2)]; });

    // vertical: quadrature convolution folded into one n3 x n3 matrix
    // acting on vertical pencils, built from interpolation/extension rows
    const int n3 = g.n3();
    std::vector<double> Mv(static_cast<std::size_t>(n3) * n3, 0.0);
    for (int j = 0; j < n3; ++j) {
        for (std::size_t i = 0; i < q.s.size(); ++i) {
            const double wgt = q.wq[i] * bump(q.s[i], r) / mass;
            const std::vector<double> row = eval_row(g, g.x3(j) - q.s[i]);
            for (int k = 0; k < n3; ++k) Mv[static_cast<std::size_t>(j) * n3 + k] += wgt * row[k];
        }
    }
    ScalarField out(f.grid_ptr());
    parallel_for(n3, [&](int j) {
        double* oj = out.plane(j);
        for (int k = 0; k < n3; ++k) {
            const double c = Mv[static_cast<std::size_t>(j) * n3 + k];
            if (c != 0.0) kernels::ops().axpy(oj, c, tang.plane(k), g.plane_size());
        }
    });
    return out;
}

VectorField mollify(const VectorField& f, double r) {
    VectorField out;
    for (int i = 0; i < 3; ++i) out.c[i] = mollify(f.c[i], r);
    return out;
}

std::pair<VectorField, ScalarField> divergence_correction(const VectorField& w,
                                                          const PoissonSolver& solver) {
    MixedBVP bvp{divergence(w), BoundaryTrace(w.grid_ptr(), Plane::Gamma1),
                 restrict_to(w.c[2], Plane::Gamma0)};
    ScalarField h = solver.solve_constant_poisson(bvp);
    VectorField corrected = w;
    corrected -= gradient(h);
    return {std::move(corrected), std::move(h)};
}

RegularizationResult regularize_datum(const VectorField& v0, double r,
                                      const PoissonSolver& solver, const CutoffPair& cutoffs,
                                      double delta) {
    RegularizationResult res;
    res.r = r;
    const VectorField tilde = shift_rescale(v0, r);
    const VectorField w = mollify(tilde, r);
    auto [v0r, hr] = divergence_correction(w, solver);
    res.v0r = std::move(v0r);
    res.hr = std::move(hr);
    res.datum_error = aniso_norm(res.v0r - v0, 2.5 + delta);
    res.curl_ratio = localized_norm(curl(res.v0r), cutoffs.chi(), 2.0 + delta) /
                     (1.0 + localized_norm(curl(v0), cutoffs.chi(), 2.0 + delta));
    res.div_residual = l2_norm(divergence(res.v0r));
    res.bottom_bc_residual = trace_max_abs(restrict_to(res.v0r.c[2], Plane::Gamma0));
    return res;
}

}  // namespace lelab
