#include "lelab/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <vector>

#include "lelab/kernels.hpp"
#include "lelab/parallel.hpp"

namespace lelab::fourier {

namespace {

struct PlanPair {
    fftw_plan r2c;
    fftw_plan c2r;
};

// fftw planning is not thread-safe; new-array execution is.
PlanPair plans_for(int n1, int n2) {
    static std::map<std::pair<int, int>, PlanPair> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({n1, n2});
    if (it != cache.end()) return it->second;

    std::vector<double> rbuf(static_cast<std::size_t>(n1) * n2);
    std::vector<std::complex<double>> cbuf(static_cast<std::size_t>(n1) * (n2 / 2 + 1));
    PlanPair p;
    p.r2c = fftw_plan_dft_r2c_2d(n1, n2, rbuf.data(),
                                 reinterpret_cast<fftw_complex*>(cbuf.data()),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.c2r = fftw_plan_dft_c2r_2d(n1, n2, reinterpret_cast<fftw_complex*>(cbuf.data()),
                                 rbuf.data(), FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[{n1, n2}] = p;
    return p;
}

}  // namespace

void forward_plane(const Grid& g, const double* phys, std::complex<double>* spec) {
    PlanPair p = plans_for(g.n1(), g.n2());
    // r2c out-of-place preserves its input, but the API is non-const
    fftw_execute_dft_r2c(p.r2c, const_cast<double*>(phys),
                         reinterpret_cast<fftw_complex*>(spec));
}

void inverse_plane(const Grid& g, const std::complex<double>* spec, double* phys) {
    PlanPair p = plans_for(g.n1(), g.n2());
    // multi-dimensional c2r destroys its input: work on a copy
    std::vector<std::complex<double>> scratch(spec, spec + g.spectral_plane_size());
    fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), phys);
    kernels::ops().scale(phys, phys, 1.0 / (g.n1() * g.n2()), g.plane_size());
}

void forward(const Grid& g, const double* phys, std::complex<double>* spec) {
    parallel_for(g.n3(), [&](int j) {
        forward_plane(g, phys + j * g.plane_size(), spec + j * g.spectral_plane_size());
    });
}

void inverse(const Grid& g, const std::complex<double>* spec, double* phys) {
    parallel_for(g.n3(), [&](int j) {
        inverse_plane(g, spec + j * g.spectral_plane_size(), phys + j * g.plane_size());
    });
}

}  // namespace lelab::fourier
