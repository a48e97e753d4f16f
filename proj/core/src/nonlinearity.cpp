#include "thinfilm/nonlinearity.hpp"

#include "thinfilm/errors.hpp"
#include "thinfilm/transform.hpp"

namespace thinfilm {

SpectralField nonlinearity(const SpectralField& u, std::size_t pad_samples) {
    const std::size_t n = u.modes();
    std::size_t m = pad_samples == 0 ? 4 * n : pad_samples;
    if (m < 3 * n + 1)
        throw ResolutionError("nonlinearity: padded grid must have at least 3N+1 samples");

    // (dx u)^2 on the padded grid. For Neumann u the derivative is a pure
    // sine field; its square is even again, so the projection below lands
    // back in the cosine basis.
    const SpectralField du = derivative(u, 1);
    GridBuffer g = to_physical(du, m);
    for (double& v : g.values) v *= v;

    SpectralField p = from_physical(g, u.basis);
    // B(u) = -dx^2 Pi_N (dx u)^2: multiply mode j by +q_j^2
    for (std::size_t j = 1; j <= n; ++j) {
        const double q = wavenumber(u.basis, j);
        p.a[j - 1] *= q * q;
        p.b[j - 1] *= q * q;
    }
    return p;
}

double orthogonality_residual(const SpectralField& u) {
    return inner(u, nonlinearity(u));
}

} // namespace thinfilm
