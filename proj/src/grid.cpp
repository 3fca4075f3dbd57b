#include "lelab/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lelab {

namespace {
constexpr double kPi = std::numbers::pi;
}

Grid::Grid(int n1, int n2, int n3) : n1_(n1), n2_(n2), n3_(n3) {
    if (n1 < 2 || n1 % 2 != 0 || n2 < 2 || n2 % 2 != 0)
        throw std::invalid_argument("Grid: tangential mode counts must be even and >= 2");
    if (n3 < 5) throw std::invalid_argument("Grid: need at least 5 vertical collocation points");

    const int N = n3 - 1;
    x3_.resize(n3);
    for (int j = 0; j <= N; ++j) x3_[j] = (1.0 - std::cos(kPi * j / N)) / 2.0;

    // Differentiation matrix for Lobatto nodes c_j = cos(pi j / N) on
    // [-1,1], then d/dx3 = -2 d/dc under x3 = (1 - c)/2. Diagonal by the
    // negative-sum trick.
    d1_.assign(static_cast<std::size_t>(n3) * n3, 0.0);
    std::vector<double> c(n3), w(n3);
    for (int j = 0; j <= N; ++j) {
        c[j] = std::cos(kPi * j / N);
        w[j] = (j == 0 || j == N) ? 2.0 : 1.0;
        if (j % 2 == 1) w[j] = -w[j];
    }
    for (int i = 0; i <= N; ++i) {
        double rowsum = 0.0;
        for (int j = 0; j <= N; ++j) {
            if (i == j) continue;
            const double v = -2.0 * (w[i] / w[j]) / (c[i] - c[j]);
            d1_[static_cast<std::size_t>(i) * n3 + j] = v;
            rowsum += v;
        }
        d1_[static_cast<std::size_t>(i) * n3 + i] = -rowsum;
    }

    // Clenshaw-Curtis weights: integrate the Chebyshev interpolant. With
    // the DCT-I coefficient map a_k = (2/(N p_k)) sum_j'' f_j cos(pi jk/N)
    // and moments int T_k = 2/(1-k^2) (k even), the weight at node j is
    // sum_{k even} m_k * (2/(N p_k p_j)) cos(pi jk/N); halved for [0,1].
    w3_.resize(n3);
    for (int j = 0; j <= N; ++j) {
        const double pj = (j == 0 || j == N) ? 2.0 : 1.0;
        double acc = 0.0;
        for (int k = 0; k <= N; k += 2) {
            const double pk = (k == 0 || k == N) ? 2.0 : 1.0;
            const double mk = 2.0 / (1.0 - static_cast<double>(k) * k);
            acc += mk * (2.0 / (N * pk * pj)) * std::cos(kPi * j * k / N);
        }
        w3_[j] = acc / 2.0;
    }
}

double Grid::x1(int i) const { return 2.0 * kPi * i / n1_; }
double Grid::x2(int i) const { return 2.0 * kPi * i / n2_; }

double Grid::tangential_cell_area() const { return (2.0 * kPi / n1_) * (2.0 * kPi / n2_); }

GridPtr make_grid(int n1, int n2, int n3) { return std::make_shared<const Grid>(n1, n2, n3); }

}  // namespace lelab
