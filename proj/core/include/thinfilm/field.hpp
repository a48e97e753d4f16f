#pragma once

#include <cstddef>
#include <vector>

#include "thinfilm/basis.hpp"

namespace thinfilm {

enum class PaddingTag { Plain, Dealiased };

// Samples at M uniform points x_i = i*period/M on the (extended, for
// Neumann) periodic grid. `length` is the physical domain size L, so
// quadrature over [0,L] is (L/M) * sum for either boundary condition.
struct GridBuffer {
    std::vector<double> values;
    double period = 1.0;
    double length = 1.0;
    PaddingTag padding = PaddingTag::Plain;

    std::size_t size() const { return values.size(); }
};

// Zero-mean field as cosine/sine amplitudes per retained mode:
//   f(x) = sum_j a[j-1]*cos(q_j x) + b[j-1]*sin(q_j x).
// For Neumann state fields b is identically zero; odd derivatives of
// Neumann fields populate b and live only on the extended grid.
struct SpectralField {
    BasisSpec basis;
    std::vector<double> a;  // cosine amplitudes, size N
    std::vector<double> b;  // sine amplitudes, size N

    SpectralField() = default;
    explicit SpectralField(const BasisSpec& basis_);

    std::size_t modes() const { return basis.truncation; }

    SpectralField& operator+=(const SpectralField& rhs);
    SpectralField& operator-=(const SpectralField& rhs);
    SpectralField& operator*=(double s);
    friend SpectralField operator+(SpectralField lhs, const SpectralField& rhs) { return lhs += rhs; }
    friend SpectralField operator-(SpectralField lhs, const SpectralField& rhs) { return lhs -= rhs; }
    friend SpectralField operator*(SpectralField lhs, double s) { return lhs *= s; }

    bool finite() const;
};

// Per-mode multiplication by the derivative symbol, order in {1,2,3,4}.
SpectralField derivative(const SpectralField& f, int order);

// Integral over [0,L]; identically 0 by construction (mode 0 absent).
double mass(const SpectralField& f);

// Trapezoid quadrature of a grid buffer over [0,L].
double mass(const GridBuffer& g);

// L2 inner product over [0,L] from coefficients.
double inner(const SpectralField& f, const SpectralField& g);

// Restriction of f to the first N modes of `target` (the projection Pi_N);
// also used to embed into a larger truncation.
SpectralField project(const SpectralField& f, const BasisSpec& target);

} // namespace thinfilm
