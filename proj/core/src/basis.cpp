#include "thinfilm/basis.hpp"

#include <numbers>
#include <string>

#include "thinfilm/errors.hpp"

namespace thinfilm {

BasisSpec::BasisSpec(BoundaryCondition bc_, double L, std::size_t N)
    : bc(bc_), length(L), truncation(N) {
    if (!(L > 0.0)) throw ResolutionError("BasisSpec: length must be positive");
    if (N < 1) throw ResolutionError("BasisSpec: truncation must be >= 1");
}

double BasisSpec::period() const {
    return bc == BoundaryCondition::Periodic ? length : 2.0 * length;
}

double wavenumber(const BasisSpec& basis, std::size_t j) {
    if (j < 1 || j > basis.truncation)
        throw IndexError("wavenumber: mode index " + std::to_string(j) + " outside [1," +
                         std::to_string(basis.truncation) + "]");
    return 2.0 * std::numbers::pi * static_cast<double>(j) / basis.period();
}

double nu_critical(const BasisSpec& basis) {
    const double q1 = 2.0 * std::numbers::pi / basis.period();
    return -q1 * q1;
}

} // namespace thinfilm
