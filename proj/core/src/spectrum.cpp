#include "thinfilm/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace thinfilm {

double eigenvalue(const BasisSpec& basis, double nu, std::size_t j) {
    const double q = wavenumber(basis, j);
    const double q2 = q * q;
    return -q2 * q2 - nu * q2;
}

LinearSpectrum LinearSpectrum::build(const BasisSpec& basis, double nu) {
    LinearSpectrum s;
    s.lambdas.resize(basis.truncation);
    for (std::size_t j = 1; j <= basis.truncation; ++j)
        s.lambdas[j - 1] = eigenvalue(basis, nu, j);
    return s;
}

bool LinearSpectrum::all_stable() const {
    return std::all_of(lambdas.begin(), lambdas.end(), [](double l) { return l < 0.0; });
}

double LinearSpectrum::min_decay() const {
    double m = std::numeric_limits<double>::infinity();
    for (double l : lambdas)
        if (l < 0.0) m = std::min(m, -l);
    return m;
}

} // namespace thinfilm
