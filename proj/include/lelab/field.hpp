// field.hpp: spectral-collocation fields on T^2 x (0,1) and the basic
// calculus on them: exact tangential Fourier derivatives, Chebyshev
// collocation vertical derivatives, boundary restriction, quadrature, and
// dealiased products. Physical values are stored plane-major, x3 slowest.
// All operations are pure; fields are plain values.
#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "lelab/grid.hpp"

namespace lelab {

enum class Plane { Gamma0, Gamma1 };  // x3 = 0 and x3 = 1

class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(GridPtr grid, double fill = 0.0);

    static ScalarField from_function(GridPtr grid,
                                     const std::function<double(double, double, double)>& f);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    bool empty() const { return grid_ == nullptr; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }

    double operator()(int i1, int i2, int j3) const {
        return v_[static_cast<std::size_t>(j3) * grid_->plane_size() +
                  static_cast<std::size_t>(i1) * grid_->n2() + i2];
    }
    double& at(int i1, int i2, int j3) {
        return v_[static_cast<std::size_t>(j3) * grid_->plane_size() +
                  static_cast<std::size_t>(i1) * grid_->n2() + i2];
    }
    const double* plane(int j3) const { return v_.data() + j3 * grid_->plane_size(); }
    double* plane(int j3) { return v_.data() + j3 * grid_->plane_size(); }

    ScalarField& operator+=(const ScalarField& o);
    ScalarField& operator-=(const ScalarField& o);
    ScalarField& operator*=(double a);
    // this += a*x
    ScalarField& axpy(double a, const ScalarField& x);

  private:
    GridPtr grid_;
    std::vector<double> v_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double a, const ScalarField& f);

// pointwise nodal product (no truncation: exact nodal algebra)
ScalarField multiply(const ScalarField& a, const ScalarField& b);
// product followed by tangential 2/3-rule truncation
ScalarField multiply_dealiased(const ScalarField& a, const ScalarField& b);
// zero all tangential modes with |k1| > n1/3 or k2 > n2/3
ScalarField dealias(const ScalarField& f);

// exact spectral d/dx_axis, axis in {1,2}; the Nyquist mode is annihilated
// (its odd-derivative multiplier has no real-field representation)
ScalarField tangential_derivative(const ScalarField& f, int axis);

// Chebyshev collocation d/dx3; exact for polynomials of degree <= n3-1
ScalarField vertical_derivative(const ScalarField& f);

ScalarField derivative(const ScalarField& f, int axis);  // 1|2 tangential, 3 vertical

class BoundaryTrace {
  public:
    BoundaryTrace() = default;
    BoundaryTrace(GridPtr grid, Plane which);

    const Grid& grid() const { return *grid_; }
    Plane which() const { return which_; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }
    double operator()(int i1, int i2) const {
        return v_[static_cast<std::size_t>(i1) * grid_->n2() + i2];
    }
    double& at(int i1, int i2) { return v_[static_cast<std::size_t>(i1) * grid_->n2() + i2]; }

  private:
    GridPtr grid_;
    Plane which_ = Plane::Gamma0;
    std::vector<double> v_;
};

BoundaryTrace restrict_to(const ScalarField& f, Plane which);

// int_Omega f dx: tangential trapezoid (exact for resolved modes) times
// vertical Clenshaw-Curtis weights
double integrate(const ScalarField& f);
double inner(const ScalarField& a, const ScalarField& b);  // L2(Omega) inner product
double l2_norm(const ScalarField& f);
double max_abs(const ScalarField& f);

// surface quantities on Gamma_0 / Gamma_1
double trace_integral(const BoundaryTrace& t);
double trace_l2(const BoundaryTrace& t);
double trace_max(const BoundaryTrace& t);      // max of values (signed)
double trace_max_abs(const BoundaryTrace& t);
// || (1 - Delta_2)^{sigma/2} t ||_{L2(T^2)}
double trace_sobolev_norm(const BoundaryTrace& t, double sigma);

// generic tangential multiplier application, m = m(k1, k2)
ScalarField apply_real_multiplier(const ScalarField& f,
                                  const std::function<double(int, int)>& m);
ScalarField apply_complex_multiplier(const ScalarField& f,
                                     const std::function<std::complex<double>(int, int)>& m);

struct VectorField {
    std::array<ScalarField, 3> c;

    VectorField() = default;
    explicit VectorField(GridPtr grid, double fill = 0.0)
        : c{ScalarField(grid, fill), ScalarField(grid, fill), ScalarField(grid, fill)} {}

    const Grid& grid() const { return c[0].grid(); }
    const GridPtr& grid_ptr() const { return c[0].grid_ptr(); }
    ScalarField& operator[](int i) { return c[i]; }
    const ScalarField& operator[](int i) const { return c[i]; }

    VectorField& operator+=(const VectorField& o);
    VectorField& operator-=(const VectorField& o);
    VectorField& operator*=(double a);
    VectorField& axpy(double a, const VectorField& x);
};

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double a, const VectorField& f);

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& f);
VectorField curl(const VectorField& f);
double l2_norm(const VectorField& f);
double max_abs(const VectorField& f);

}  // namespace lelab
