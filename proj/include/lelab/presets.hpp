// presets.hpp: baked initial data. All presets are divergence-free with
// vanishing third component on the bottom boundary, so they are admissible
// without regularization.
//
//   rest     v0 = 0
//   shear    v0 = (U(x3), 0, 0),  U = sin(pi x3/2); the exact solution is
//            eta = x + t U e1, v constant, q = 0
//   generic  curl of a smooth potential plus a weak shear; carries all
//            three components and genuine tangential structure
#pragma once

#include <string>

#include "lelab/field.hpp"
#include "lelab/rng.hpp"

namespace lelab {

VectorField preset_datum(const std::string& name, const GridPtr& grid);

// smooth divergence-free perturbation for twin runs, compatible at Gamma_0
VectorField preset_perturbation(const GridPtr& grid);

// band-limited random field with Gaussian-decaying tangential amplitudes
// and a low-degree polynomial vertical profile; used by property tests
ScalarField random_smooth_field(const GridPtr& grid, Rng& rng, int kmax, int vdeg,
                                double amplitude);
VectorField random_smooth_vector(const GridPtr& grid, Rng& rng, int kmax, int vdeg,
                                 double amplitude);

}  // namespace lelab
