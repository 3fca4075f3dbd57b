// grid.hpp: discretization of T^2 x (0,1). Tangential directions carry a
// Fourier representation with fixed periods 2*pi; the vertical direction is
// Chebyshev-Lobatto collocation on [0,1] with x3_0 = 0 (bottom boundary) and
// x3_{n3-1} = 1 (free boundary).
#pragma once

#include <memory>
#include <vector>

namespace lelab {

class Grid {
  public:
    // n1, n2: even tangential mode counts; n3 >= 5 vertical collocation points.
    Grid(int n1, int n2, int n3);

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int n3() const { return n3_; }

    // tangential sample points, x_l = 2*pi*i/n_l
    double x1(int i) const;
    double x2(int i) const;
    // vertical collocation points, ascending, x3(0) = 0, x3(n3-1) = 1
    double x3(int j) const { return x3_[j]; }
    const std::vector<double>& x3() const { return x3_; }

    // signed tangential wavenumbers of the r2c layout: k1 over rows
    // 0..n1-1 (0,1,...,n1/2,-n1/2+1,...,-1), k2 over columns 0..n2/2
    int k1(int i1) const { return i1 <= n1_ / 2 ? i1 : i1 - n1_; }
    int k2(int i2) const { return i2; }

    // Chebyshev collocation derivative matrix mapped to [0,1], row-major
    // n3 x n3; row j gives d/dx3 at node j. Exact for polynomials of
    // degree <= n3-1; diagonal by the negative-sum trick.
    const std::vector<double>& deriv_matrix() const { return d1_; }
    double d1(int j, int k) const { return d1_[static_cast<std::size_t>(j) * n3_ + k]; }

    // Clenshaw-Curtis weights on [0,1]; exact for polynomials of degree <= n3-1.
    const std::vector<double>& vertical_weights() const { return w3_; }

    // sizes
    std::size_t plane_size() const { return static_cast<std::size_t>(n1_) * n2_; }
    std::size_t size() const { return plane_size() * n3_; }
    int spectral_cols() const { return n2_ / 2 + 1; }
    std::size_t spectral_plane_size() const {
        return static_cast<std::size_t>(n1_) * spectral_cols();
    }
    std::size_t spectral_size() const { return spectral_plane_size() * n3_; }

    // cell area of the tangential trapezoid rule, (2*pi/n1)*(2*pi/n2)
    double tangential_cell_area() const;

    bool same_as(const Grid& other) const {
        return n1_ == other.n1_ && n2_ == other.n2_ && n3_ == other.n3_;
    }

  private:
    int n1_, n2_, n3_;
    std::vector<double> x3_;
    std::vector<double> d1_;
    std::vector<double> w3_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_grid(int n1, int n2, int n3);

}  // namespace lelab
