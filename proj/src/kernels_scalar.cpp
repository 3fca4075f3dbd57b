// Scalar reference kernels. These define the semantics the SIMD variants
// must reproduce: pointwise loops bit-for-bit, reductions to rounding.
#include "lelab/kernels.hpp"

#include <cmath>

namespace lelab::kernels {
namespace {

void s_add(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}
void s_sub(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] - b[i];
}
void s_mul(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}
void s_scale(double* out, const double* a, double alpha, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * alpha;
}
void s_axpy(double* y, double alpha, const double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}
void s_mul_acc(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] += a[i] * b[i];
}
void s_mul_sub(double* out, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] -= a[i] * b[i];
}
void s_cplx_scale_real(double* z, const double* m, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        z[2 * i] *= m[i];
        z[2 * i + 1] *= m[i];
    }
}
double s_sum(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i];
    return s;
}
double s_dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}
double s_sumsq(const double* a, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
    return s;
}
double s_max_abs(const double* a, std::size_t n) {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {s_add,    s_sub, s_mul, s_scale,  s_axpy, s_mul_acc,
                            s_mul_sub, s_cplx_scale_real,
                            s_sum,    s_dot, s_sumsq, s_max_abs};
    return ops;
}

}  // namespace lelab::kernels
