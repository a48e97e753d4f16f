#pragma once

#include <cstdint>

#include "thinfilm/basis.hpp"
#include "thinfilm/noise.hpp"
#include "thinfilm/spectrum.hpp"

namespace thinfilm {

// Bundles everything that defines the Galerkin system.
struct ModelSpec {
    BasisSpec basis;
    double nu = 1.0;
    NoiseSpectrum noise;

    LinearSpectrum spectrum() const { return LinearSpectrum::build(basis, nu); }
    std::uint64_t fingerprint() const;
};

} // namespace thinfilm
