#pragma once

#include "thinfilm/field.hpp"

namespace thinfilm {

enum class NormKind { L2, Hs, Linf, C1, L4 };

// L2 and Hs are exact coefficient sums (Parseval weight L/2 per mode,
// Hs via pure-wavenumber weights q^{2s}, s in [-4,4]). Linf, C1 and L4
// are evaluated on a 4x-oversampled physical grid.
double norm(const SpectralField& f, NormKind kind, double s = 0.0);

inline double norm_l2(const SpectralField& f) { return norm(f, NormKind::L2); }
inline double norm_hs(const SpectralField& f, double s) { return norm(f, NormKind::Hs, s); }

// ||f||^2 in L2 without the square root.
double norm_l2_sq(const SpectralField& f);

} // namespace thinfilm
