#include "thinfilm/norms.hpp"

#include <cmath>

#include "thinfilm/errors.hpp"
#include "thinfilm/transform.hpp"

namespace thinfilm {

namespace {

// 4x-oversampled grid; the +1 keeps rectangle quadrature of f^4 exact
// (modes of f^4 stay below the grid's alias wavenumber).
std::size_t oversampled(const SpectralField& f) { return 4 * f.modes() + 1; }

double grid_linf(const SpectralField& f) {
    const GridBuffer g = to_physical(f, oversampled(f));
    double m = 0.0;
    for (double v : g.values) m = std::max(m, std::abs(v));
    return m;
}

double grid_l4(const SpectralField& f) {
    const GridBuffer g = to_physical(f, oversampled(f));
    double s = 0.0;
    for (double v : g.values) {
        const double v2 = v * v;
        s += v2 * v2;
    }
    // integral over [0,L] is (L/M)*sum regardless of extension
    s *= f.basis.length / static_cast<double>(g.size());
    return std::pow(s, 0.25);
}

} // namespace

double norm_l2_sq(const SpectralField& f) {
    const double w = 0.5 * f.basis.length;
    double s = 0.0;
    for (std::size_t i = 0; i < f.a.size(); ++i) s += f.a[i] * f.a[i] + f.b[i] * f.b[i];
    return w * s;
}

double norm(const SpectralField& f, NormKind kind, double s) {
    switch (kind) {
        case NormKind::L2:
            return std::sqrt(norm_l2_sq(f));
        case NormKind::Hs: {
            if (s < -4.0 || s > 4.0) throw ResolutionError("norm: Hs exponent outside [-4,4]");
            const double w = 0.5 * f.basis.length;
            double acc = 0.0;
            for (std::size_t j = 1; j <= f.modes(); ++j) {
                const double q = wavenumber(f.basis, j);
                const double amp2 = f.a[j - 1] * f.a[j - 1] + f.b[j - 1] * f.b[j - 1];
                acc += std::pow(q, 2.0 * s) * amp2;
            }
            return std::sqrt(w * acc);
        }
        case NormKind::Linf:
            return grid_linf(f);
        case NormKind::C1:
            return grid_linf(f) + grid_linf(derivative(f, 1));
        case NormKind::L4:
            return grid_l4(f);
    }
    throw ResolutionError("norm: unknown kind");
}

} // namespace thinfilm
