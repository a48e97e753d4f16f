#include <doctest.h>

#include <cmath>
#include <numbers>

#include "thinfilm/errors.hpp"
#include "thinfilm/field.hpp"
#include "thinfilm/norms.hpp"
#include "thinfilm/rng.hpp"
#include "thinfilm/transform.hpp"

using namespace thinfilm;

namespace {
constexpr double pi = std::numbers::pi;

SpectralField random_field(const BasisSpec& basis, std::uint64_t seed) {
    SpectralField f(basis);
    for (std::size_t j = 1; j <= f.modes(); ++j) {
        f.a[j - 1] = gaussian_draw(seed, 0, static_cast<std::uint32_t>(2 * j), 0);
        if (basis.bc == BoundaryCondition::Periodic)
            f.b[j - 1] = gaussian_draw(seed, 0, static_cast<std::uint32_t>(2 * j + 1), 0);
    }
    return f;
}
} // namespace

TEST_CASE("derivative rotates cos into -q sin") {
    const BasisSpec basis(BoundaryCondition::Periodic, 2.0 * pi, 4);
    SpectralField f(basis);
    f.a[2] = 1.0;  // cos(3x)
    const SpectralField d = derivative(f, 1);
    CHECK(d.a[2] == doctest::Approx(0.0));
    CHECK(d.b[2] == doctest::Approx(-3.0));  // -3 sin(3x)
    const SpectralField d2 = derivative(f, 2);
    CHECK(d2.a[2] == doctest::Approx(-9.0));  // -9 cos(3x)
    const SpectralField d4 = derivative(f, 4);
    CHECK(d4.a[2] == doctest::Approx(81.0));
    CHECK_THROWS_AS(derivative(f, 0), ResolutionError);
    CHECK_THROWS_AS(derivative(f, 5), ResolutionError);
}

TEST_CASE("spectral mass vanishes and grid mass matches quadrature") {
    const BasisSpec basis(BoundaryCondition::Periodic, 2.0 * pi, 8);
    const SpectralField f = random_field(basis, 11);
    CHECK(mass(f) == 0.0);
    CHECK(std::abs(mass(to_physical(f, 64))) < 1e-12);
}

TEST_CASE("inner product realizes Parseval with weight L/2") {
    const BasisSpec basis(BoundaryCondition::Periodic, 2.0 * pi, 6);
    SpectralField f(basis);
    f.a[0] = 2.0;
    f.b[3] = -1.0;
    // ||2 cos x - sin 4x||^2 = (L/2)(4 + 1) = 5 pi
    CHECK(inner(f, f) == doctest::Approx(5.0 * pi).epsilon(1e-12));
    // against the grid quadrature oracle
    const GridBuffer g = to_physical(f, 101);
    double s = 0.0;
    for (double v : g.values) s += v * v;
    s *= basis.length / static_cast<double>(g.size());
    CHECK(inner(f, f) == doctest::Approx(s).epsilon(1e-10));
}

TEST_CASE("projection restricts and embeds consistently") {
    const BasisSpec coarse(BoundaryCondition::Periodic, 2.0 * pi, 4);
    const BasisSpec fine(BoundaryCondition::Periodic, 2.0 * pi, 8);
    const SpectralField f = random_field(fine, 5);
    const SpectralField r = project(f, coarse);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(r.a[i] == f.a[i]);
        CHECK(r.b[i] == f.b[i]);
    }
    const SpectralField back = project(r, fine);
    for (std::size_t i = 4; i < 8; ++i) {
        CHECK(back.a[i] == 0.0);
        CHECK(back.b[i] == 0.0);
    }
    CHECK(project(back, coarse).a == r.a);
    CHECK_THROWS_AS(project(f, BasisSpec(BoundaryCondition::Neumann, 2.0 * pi, 4)), BasisError);
}

TEST_CASE("field arithmetic enforces matching bases") {
    SpectralField f((BasisSpec(BoundaryCondition::Periodic, 1.0, 4)));
    SpectralField g((BasisSpec(BoundaryCondition::Periodic, 1.0, 5)));
    CHECK_THROWS_AS(f += g, BasisError);
}
