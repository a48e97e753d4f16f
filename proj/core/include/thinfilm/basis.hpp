#pragma once

#include <cstddef>

namespace thinfilm {

enum class BoundaryCondition { Periodic, Neumann };

// Truncated zero-mean trigonometric basis on [0,L].
//
// Mode index j in [1,N] carries wavenumber q_j = 2*pi*j/L (Periodic, cosine
// plus sine partner) or q_j = pi*j/L (Neumann, cosine only). Mode 0 (the
// mean) is excluded by construction. Neumann fields are handled as even
// 2L-periodic extensions, so internally every field is a trigonometric
// polynomial on a period P = L (Periodic) or P = 2L (Neumann) with
// q_j = 2*pi*j/P.
struct BasisSpec {
    BoundaryCondition bc = BoundaryCondition::Periodic;
    double length = 1.0;   // domain size L > 0
    std::size_t truncation = 1;  // retained mode indices N >= 1

    BasisSpec() = default;
    BasisSpec(BoundaryCondition bc_, double L, std::size_t N);

    // Period of the underlying trigonometric representation (L or 2L).
    double period() const;

    bool operator==(const BasisSpec&) const = default;
};

// q_j for 1 <= j <= N; throws IndexError otherwise.
double wavenumber(const BasisSpec& basis, std::size_t j);

// Largest nu at which some eigenvalue of A = -dx^4 + nu dx^2 is >= 0,
// i.e. -q_1^2; below it the first mode is linearly unstable.
double nu_critical(const BasisSpec& basis);

} // namespace thinfilm
