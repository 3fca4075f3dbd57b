// kernels.hpp: data-parallel inner loops on contiguous double arrays.
//
// Every kernel has a scalar reference implementation and, on x86-64, an
// AVX2 variant; the active set is chosen once at startup from CPUID and can
// be forced with LELAB_SIMD=scalar|avx2. Pointwise kernels are written
// without FMA so both variants produce identical bits (the whole project is
// compiled with -ffp-contract=off). Reductions accumulate lane-wise in the
// SIMD variants and therefore agree with the scalar ones only to rounding.
#pragma once

#include <cstddef>

namespace lelab::kernels {

struct Ops {
    // pointwise
    void (*add)(double* out, const double* a, const double* b, std::size_t n);
    void (*sub)(double* out, const double* a, const double* b, std::size_t n);
    void (*mul)(double* out, const double* a, const double* b, std::size_t n);
    void (*scale)(double* out, const double* a, double alpha, std::size_t n);
    void (*axpy)(double* y, double alpha, const double* x, std::size_t n);     // y += alpha*x
    void (*mul_acc)(double* out, const double* a, const double* b, std::size_t n);  // out += a*b
    void (*mul_sub)(double* out, const double* a, const double* b, std::size_t n);  // out -= a*b
    // z is interleaved complex (re,im) of length n pairs; m is a real
    // multiplier per complex element
    void (*cplx_scale_real)(double* z, const double* m, std::size_t n);
    // reductions
    double (*sum)(const double* a, std::size_t n);
    double (*dot)(const double* a, const double* b, std::size_t n);
    double (*sumsq)(const double* a, std::size_t n);
    double (*max_abs)(const double* a, std::size_t n);
};

// Active kernel set (runtime-dispatched). Initialized on first use.
const Ops& ops();

// Named variants, for equivalence tests.
const Ops& scalar_ops();
const Ops* avx2_ops();   // nullptr when unsupported by build or CPU

// "scalar" or "avx2": what ops() dispatches to.
const char* active_name();

}  // namespace lelab::kernels
