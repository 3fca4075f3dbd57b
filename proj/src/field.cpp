#include "lelab/field.hpp"

#include <cmath>
#include <stdexcept>

#include "lelab/fourier.hpp"
#include "lelab/kernels.hpp"
#include "lelab/parallel.hpp"

namespace lelab {

namespace {

void check_same(const ScalarField& a, const ScalarField& b) {
    if (a.empty() || b.empty() || !a.grid().same_as(b.grid()))
        throw std::invalid_argument("field operation on mismatched grids");
}

using Spectral = std::vector<std::complex<double>>;

Spectral to_spectral(const ScalarField& f) {
    Spectral s(f.grid().spectral_size());
    fourier::forward(f.grid(), f.data(), s.data());
    return s;
}

ScalarField to_physical(const Grid& g, const GridPtr& gp, const Spectral& s) {
    ScalarField f(gp);
    fourier::inverse(g, s.data(), f.data());
    return f;
}

}  // namespace

ScalarField::ScalarField(GridPtr grid, double fill)
    : grid_(std::move(grid)), v_(grid_->size(), fill) {}

ScalarField ScalarField::from_function(
    GridPtr grid, const std::function<double(double, double, double)>& f) {
    ScalarField out(grid);
    const Grid& g = *grid;
    for (int j3 = 0; j3 < g.n3(); ++j3)
        for (int i1 = 0; i1 < g.n1(); ++i1)
            for (int i2 = 0; i2 < g.n2(); ++i2)
                out.at(i1, i2, j3) = f(g.x1(i1), g.x2(i2), g.x3(j3));
    return out;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
    check_same(*this, o);
    kernels::ops().add(data(), data(), o.data(), size());
    return *this;
}
ScalarField& ScalarField::operator-=(const ScalarField& o) {
    check_same(*this, o);
    kernels::ops().sub(data(), data(), o.data(), size());
    return *this;
}
ScalarField& ScalarField::operator*=(double a) {
    kernels::ops().scale(data(), data(), a, size());
    return *this;
}
ScalarField& ScalarField::axpy(double a, const ScalarField& x) {
    check_same(*this, x);
    kernels::ops().axpy(data(), a, x.data(), size());
    return *this;
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    ScalarField r = a;
    r += b;
    return r;
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    ScalarField r = a;
    r -= b;
    return r;
}
ScalarField operator*(double a, const ScalarField& f) {
    ScalarField r = f;
    r *= a;
    return r;
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
    check_same(a, b);
    ScalarField r(a.grid_ptr());
    kernels::ops().mul(r.data(), a.data(), b.data(), a.size());
    return r;
}

ScalarField dealias(const ScalarField& f) {
    const Grid& g = f.grid();
    const int kmax1 = g.n1() / 3;
    const int kmax2 = g.n2() / 3;
    Spectral s = to_spectral(f);
    parallel_for(g.n3(), [&](int j3) {
        std::complex<double>* p = s.data() + j3 * g.spectral_plane_size();
        for (int i1 = 0; i1 < g.n1(); ++i1) {
            const bool kill1 = std::abs(g.k1(i1)) > kmax1;
            for (int i2 = 0; i2 < g.spectral_cols(); ++i2)
                if (kill1 || i2 > kmax2) p[i1 * g.spectral_cols() + i2] = 0.0;
        }
    });
    return to_physical(g, f.grid_ptr(), s);
}

ScalarField multiply_dealiased(const ScalarField& a, const ScalarField& b) {
    return dealias(multiply(a, b));
}

ScalarField apply_complex_multiplier(
    const ScalarField& f, const std::function<std::complex<double>(int, int)>& m) {
    const Grid& g = f.grid();
    std::vector<std::complex<double>> table(g.spectral_plane_size());
    for (int i1 = 0; i1 < g.n1(); ++i1)
        for (int i2 = 0; i2 < g.spectral_cols(); ++i2)
            table[i1 * g.spectral_cols() + i2] = m(g.k1(i1), g.k2(i2));
    Spectral s = to_spectral(f);
    parallel_for(g.n3(), [&](int j3) {
        std::complex<double>* p = s.data() + j3 * g.spectral_plane_size();
        for (std::size_t i = 0; i < g.spectral_plane_size(); ++i) p[i] *= table[i];
    });
    return to_physical(g, f.grid_ptr(), s);
}

ScalarField apply_real_multiplier(const ScalarField& f,
                                  const std::function<double(int, int)>& m) {
    const Grid& g = f.grid();
    std::vector<double> table(g.spectral_plane_size());
    for (int i1 = 0; i1 < g.n1(); ++i1)
        for (int i2 = 0; i2 < g.spectral_cols(); ++i2)
            table[i1 * g.spectral_cols() + i2] = m(g.k1(i1), g.k2(i2));
    Spectral s = to_spectral(f);
    parallel_for(g.n3(), [&](int j3) {
        double* p = reinterpret_cast<double*>(s.data() + j3 * g.spectral_plane_size());
        kernels::ops().cplx_scale_real(p, table.data(), g.spectral_plane_size());
    });
    return to_physical(g, f.grid_ptr(), s);
}

ScalarField tangential_derivative(const ScalarField& f, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("tangential axis must be 1 or 2");
    const Grid& g = f.grid();
    const int nyq = (axis == 1) ? g.n1() / 2 : g.n2() / 2;
    return apply_complex_multiplier(f, [&](int k1, int k2) -> std::complex<double> {
        const int k = (axis == 1) ? k1 : k2;
        if (k == nyq || k == -nyq) return 0.0;
        return {0.0, static_cast<double>(k)};
    });
}

ScalarField vertical_derivative(const ScalarField& f) {
    const Grid& g = f.grid();
    ScalarField out(f.grid_ptr());
    // out plane j = sum_k D1(j,k) * plane k; contiguous plane axpys
    parallel_for(g.n3(), [&](int j) {
        double* oj = out.plane(j);
        for (int k = 0; k < g.n3(); ++k) {
            const double d = g.d1(j, k);
            if (d != 0.0) kernels::ops().axpy(oj, d, f.plane(k), g.plane_size());
        }
    });
    return out;
}

ScalarField derivative(const ScalarField& f, int axis) {
    return axis == 3 ? vertical_derivative(f) : tangential_derivative(f, axis);
}

BoundaryTrace::BoundaryTrace(GridPtr grid, Plane which)
    : grid_(std::move(grid)), which_(which), v_(grid_->plane_size(), 0.0) {}

BoundaryTrace restrict_to(const ScalarField& f, Plane which) {
    const Grid& g = f.grid();
    BoundaryTrace t(f.grid_ptr(), which);
    const int j3 = (which == Plane::Gamma0) ? 0 : g.n3() - 1;
    const double* src = f.plane(j3);
    std::copy(src, src + g.plane_size(), t.data());
    return t;
}

double integrate(const ScalarField& f) {
    const Grid& g = f.grid();
    double acc = 0.0;  // per-plane partial sums combined in plane order
    for (int j3 = 0; j3 < g.n3(); ++j3)
        acc += g.vertical_weights()[j3] * kernels::ops().sum(f.plane(j3), g.plane_size());
    return acc * g.tangential_cell_area();
}

double inner(const ScalarField& a, const ScalarField& b) {
    check_same(a, b);
    const Grid& g = a.grid();
    double acc = 0.0;
    for (int j3 = 0; j3 < g.n3(); ++j3)
        acc += g.vertical_weights()[j3] *
               kernels::ops().dot(a.plane(j3), b.plane(j3), g.plane_size());
    return acc * g.tangential_cell_area();
}

double l2_norm(const ScalarField& f) {
    const Grid& g = f.grid();
    double acc = 0.0;
    for (int j3 = 0; j3 < g.n3(); ++j3)
        acc += g.vertical_weights()[j3] * kernels::ops().sumsq(f.plane(j3), g.plane_size());
    return std::sqrt(std::max(acc, 0.0) * g.tangential_cell_area());
}

double max_abs(const ScalarField& f) { return kernels::ops().max_abs(f.data(), f.size()); }

double trace_integral(const BoundaryTrace& t) {
    return kernels::ops().sum(t.data(), t.size()) * t.grid().tangential_cell_area();
}
double trace_l2(const BoundaryTrace& t) {
    return std::sqrt(kernels::ops().sumsq(t.data(), t.size()) * t.grid().tangential_cell_area());
}
double trace_max(const BoundaryTrace& t) {
    double m = t.data()[0];
    for (std::size_t i = 1; i < t.size(); ++i) m = std::max(m, t.data()[i]);
    return m;
}
double trace_max_abs(const BoundaryTrace& t) {
    return kernels::ops().max_abs(t.data(), t.size());
}

double trace_sobolev_norm(const BoundaryTrace& t, double sigma) {
    const Grid& g = t.grid();
    std::vector<std::complex<double>> s(g.spectral_plane_size());
    fourier::forward_plane(g, t.data(), s.data());
    for (int i1 = 0; i1 < g.n1(); ++i1)
        for (int i2 = 0; i2 < g.spectral_cols(); ++i2) {
            const double k1 = g.k1(i1), k2 = g.k2(i2);
            s[i1 * g.spectral_cols() + i2] *=
                std::pow(1.0 + k1 * k1 + k2 * k2, sigma / 2.0);
        }
    std::vector<double> back(g.plane_size());
    fourier::inverse_plane(g, s.data(), back.data());
    return std::sqrt(kernels::ops().sumsq(back.data(), back.size()) *
                     g.tangential_cell_area());
}

VectorField& VectorField::operator+=(const VectorField& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
}
VectorField& VectorField::operator-=(const VectorField& o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
}
VectorField& VectorField::operator*=(double a) {
    for (int i = 0; i < 3; ++i) c[i] *= a;
    return *this;
}
VectorField& VectorField::axpy(double a, const VectorField& x) {
    for (int i = 0; i < 3; ++i) c[i].axpy(a, x.c[i]);
    return *this;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r = a;
    r += b;
    return r;
}
VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField r = a;
    r -= b;
    return r;
}
VectorField operator*(double a, const VectorField& f) {
    VectorField r = f;
    r *= a;
    return r;
}

VectorField gradient(const ScalarField& f) {
    VectorField g;
    g.c[0] = tangential_derivative(f, 1);
    g.c[1] = tangential_derivative(f, 2);
    g.c[2] = vertical_derivative(f);
    return g;
}

ScalarField divergence(const VectorField& f) {
    ScalarField d = tangential_derivative(f.c[0], 1);
    d += tangential_derivative(f.c[1], 2);
    d += vertical_derivative(f.c[2]);
    return d;
}

VectorField curl(const VectorField& f) {
    VectorField r;
    r.c[0] = tangential_derivative(f.c[2], 2) - vertical_derivative(f.c[1]);
    r.c[1] = vertical_derivative(f.c[0]) - tangential_derivative(f.c[2], 1);
    r.c[2] = tangential_derivative(f.c[1], 1) - tangential_derivative(f.c[0], 2);
    return r;
}

double l2_norm(const VectorField& f) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double n = l2_norm(f.c[i]);
        s += n * n;
    }
    return std::sqrt(s);
}

double max_abs(const VectorField& f) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i) m = std::max(m, max_abs(f.c[i]));
    return m;
}

}  // namespace lelab
