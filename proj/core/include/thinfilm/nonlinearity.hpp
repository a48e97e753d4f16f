#pragma once

#include "thinfilm/field.hpp"

namespace thinfilm {

// B(u) := -Pi_N dx^2 (dx u)^2, the drift contribution of the quadratic
// term. Computed by spectral differentiation, pointwise squaring on a
// padded grid and projection back; with pad_samples >= 3N+1 the Galerkin
// projection is exact (no aliasing error). pad_samples == 0 selects the
// default 4N.
SpectralField nonlinearity(const SpectralField& u, std::size_t pad_samples = 0);

// <u, B(u)>; zero for every u up to round-off.
double orthogonality_residual(const SpectralField& u);

} // namespace thinfilm
