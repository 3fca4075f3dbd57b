// AVX2 kernels. Compiled with -mavx2 only; no FMA instructions are used so
// results match the scalar reference bit-for-bit for the pointwise loops.
// Reductions keep four lane accumulators and combine them in a fixed order.
#include "lelab/kernels.hpp"

#include <immintrin.h>

#include <cmath>

namespace lelab::kernels {
namespace {

void v_add(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] + b[i];
}
void v_sub(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] - b[i];
}
void v_mul(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    for (; i < n; ++i) out[i] = a[i] * b[i];
}
void v_scale(double* out, const double* a, double alpha, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), va));
    for (; i < n; ++i) out[i] = a[i] * alpha;
}
void v_axpy(double* y, double alpha, const double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), t));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}
void v_mul_acc(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), t));
    }
    for (; i < n; ++i) out[i] += a[i] * b[i];
}
void v_mul_sub(double* out, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d t = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_loadu_pd(out + i), t));
    }
    for (; i < n; ++i) out[i] -= a[i] * b[i];
}
void v_cplx_scale_real(double* z, const double* m, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        // duplicate (m0, m1) into (m0, m0, m1, m1) to cover two complex pairs
        __m128d ml = _mm_loadu_pd(m + i);
        __m256d mm = _mm256_permute4x64_pd(_mm256_castpd128_pd256(ml), 0x50);
        _mm256_storeu_pd(z + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(z + 2 * i), mm));
    }
    for (; i < n; ++i) {
        z[2 * i] *= m[i];
        z[2 * i + 1] *= m[i];
    }
}

double reduce4(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return ((lane[0] + lane[1]) + lane[2]) + lane[3];
}

double v_sum(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double s = reduce4(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}
double v_dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    double s = reduce4(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}
double v_sumsq(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(a + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(x, x));
    }
    double s = reduce4(acc);
    for (; i < n; ++i) s += a[i] * a[i];
    return s;
}
double v_max_abs(const double* a, std::size_t n) {
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_max_pd(acc, _mm256_andnot_pd(signmask, _mm256_loadu_pd(a + i)));
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    double m = std::max(std::max(lane[0], lane[1]), std::max(lane[2], lane[3]));
    for (; i < n; ++i) m = std::max(m, std::fabs(a[i]));
    return m;
}

}  // namespace

const Ops* avx2_ops_impl() {
    static const Ops ops = {v_add,    v_sub, v_mul, v_scale,  v_axpy, v_mul_acc,
                            v_mul_sub, v_cplx_scale_real,
                            v_sum,    v_dot, v_sumsq, v_max_abs};
    return &ops;
}

}  // namespace lelab::kernels
