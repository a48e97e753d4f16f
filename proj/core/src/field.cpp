#include "thinfilm/field.hpp"

#include <algorithm>
#include <cmath>

#include "thinfilm/errors.hpp"

namespace thinfilm {

SpectralField::SpectralField(const BasisSpec& basis_)
    : basis(basis_), a(basis_.truncation, 0.0), b(basis_.truncation, 0.0) {}

namespace {
void check_compatible(const SpectralField& f, const SpectralField& g) {
    if (!(f.basis == g.basis)) throw BasisError("field arithmetic: basis mismatch");
}
} // namespace

SpectralField& SpectralField::operator+=(const SpectralField& rhs) {
    check_compatible(*this, rhs);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += rhs.a[i];
        b[i] += rhs.b[i];
    }
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& rhs) {
    check_compatible(*this, rhs);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= rhs.a[i];
        b[i] -= rhs.b[i];
    }
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (double& x : a) x *= s;
    for (double& x : b) x *= s;
    return *this;
}

bool SpectralField::finite() const {
    auto ok = [](double x) { return std::isfinite(x); };
    return std::all_of(a.begin(), a.end(), ok) && std::all_of(b.begin(), b.end(), ok);
}

SpectralField derivative(const SpectralField& f, int order) {
    if (order < 1 || order > 4) throw ResolutionError("derivative: order must be in {1,2,3,4}");
    SpectralField out(f.basis);
    for (std::size_t j = 1; j <= f.modes(); ++j) {
        const double q = wavenumber(f.basis, j);
        double ca = f.a[j - 1];
        double cb = f.b[j - 1];
        // d/dx (a cos + b sin) = (q b) cos + (-q a) sin
        for (int k = 0; k < order; ++k) {
            const double na = q * cb;
            const double nb = -q * ca;
            ca = na;
            cb = nb;
        }
        out.a[j - 1] = ca;
        out.b[j - 1] = cb;
    }
    return out;
}

double mass(const SpectralField&) {
    return 0.0;  // mode 0 absent by construction
}

double mass(const GridBuffer& g) {
    double s = 0.0;
    for (double v : g.values) s += v;
    return s * g.length / static_cast<double>(g.size());
}

double inner(const SpectralField& f, const SpectralField& g) {
    check_compatible(f, g);
    const double w = 0.5 * f.basis.length;
    double s = 0.0;
    for (std::size_t i = 0; i < f.a.size(); ++i) s += f.a[i] * g.a[i] + f.b[i] * g.b[i];
    return w * s;
}

SpectralField project(const SpectralField& f, const BasisSpec& target) {
    if (f.basis.bc != target.bc || f.basis.length != target.length)
        throw BasisError("project: incompatible domains");
    SpectralField out(target);
    const std::size_t n = std::min(f.modes(), target.truncation);
    for (std::size_t i = 0; i < n; ++i) {
        out.a[i] = f.a[i];
        out.b[i] = f.b[i];
    }
    return out;
}

} // namespace thinfilm
