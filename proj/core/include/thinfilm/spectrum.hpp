#pragma once

#include <cstddef>
#include <vector>

#include "thinfilm/basis.hpp"

namespace thinfilm {

// lambda_j = -q_j^4 - nu*q_j^2 for a single mode; throws IndexError on j
// outside [1,N].
double eigenvalue(const BasisSpec& basis, double nu, std::size_t j);

// Eigenvalues of A = -dx^4 + nu dx^2 on the retained modes.
struct LinearSpectrum {
    std::vector<double> lambdas;  // lambda_j, units 1/time, index j-1

    static LinearSpectrum build(const BasisSpec& basis, double nu);

    std::size_t modes() const { return lambdas.size(); }
    double operator[](std::size_t j) const { return lambdas[j - 1]; }  // 1-based
    bool all_stable() const;
    double min_decay() const;  // min_j |lambda_j| over stable modes
};

} // namespace thinfilm
