#include <doctest.h>

#include <numbers>

#include "thinfilm/errors.hpp"
#include "thinfilm/spectrum.hpp"

using namespace thinfilm;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("eigenvalues follow -q^4 - nu q^2") {
    const BasisSpec basis(BoundaryCondition::Periodic, 2.0 * pi, 6);
    // q_j = j here, so lambda_j = -j^4 - nu j^2
    for (double nu : {1.0, -0.5, 0.0})
        for (std::size_t j = 1; j <= 6; ++j) {
            const double q2 = static_cast<double>(j * j);
            CHECK(eigenvalue(basis, nu, j) ==
                  doctest::Approx(-q2 * q2 - nu * q2).epsilon(1e-14));
        }
    CHECK_THROWS_AS(eigenvalue(basis, 1.0, 0), IndexError);
    CHECK_THROWS_AS(eigenvalue(basis, 1.0, 7), IndexError);
}

TEST_CASE("spectrum stability classification") {
    const BasisSpec basis(BoundaryCondition::Neumann, 2.0 * pi, 4);
    // q_1 = 1/2; at nu = 2 nu_c = -1/2 the first mode is unstable:
    // lambda_1 = -1/16 + (1/2)(1/4) = 1/16 > 0.
    const LinearSpectrum stable = LinearSpectrum::build(basis, 1.0);
    CHECK(stable.all_stable());
    CHECK(stable.min_decay() == doctest::Approx(1.0 / 16.0 + 0.25).epsilon(1e-14));

    const LinearSpectrum unstable = LinearSpectrum::build(basis, -0.5);
    CHECK_FALSE(unstable.all_stable());
    CHECK(unstable[1] == doctest::Approx(1.0 / 16.0).epsilon(1e-12));
}

TEST_CASE("one-based access matches build order") {
    const BasisSpec basis(BoundaryCondition::Periodic, 2.0 * pi, 3);
    const LinearSpectrum s = LinearSpectrum::build(basis, 0.0);
    CHECK(s.modes() == 3);
    CHECK(s[1] == doctest::Approx(-1.0));
    CHECK(s[2] == doctest::Approx(-16.0));
    CHECK(s[3] == doctest::Approx(-81.0));
}
