// fourier.hpp: tangential transforms, one 2-D r2c/c2r FFT per x3 plane.
// Plans are cached per (n1,n2) and created with FFTW_ESTIMATE so the chosen
// algorithm (and hence the rounding) is reproducible run to run.
#pragma once

#include <complex>

#include "lelab/grid.hpp"

namespace lelab::fourier {

// phys: n3 contiguous planes of n1*n2 reals; spec: n3 planes of
// n1*(n2/2+1) complex coefficients (unnormalized FFTW layout).
void forward(const Grid& g, const double* phys, std::complex<double>* spec);

// Normalizes by 1/(n1*n2); spec is left untouched.
void inverse(const Grid& g, const std::complex<double>* spec, double* phys);

// Single-plane variants (boundary traces).
void forward_plane(const Grid& g, const double* phys, std::complex<double>* spec);
void inverse_plane(const Grid& g, const std::complex<double>* spec, double* phys);

}  // namespace lelab::fourier
