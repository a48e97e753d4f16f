#include <doctest.h>

#include <cmath>
#include <numbers>

#include "thinfilm/errors.hpp"
#include "thinfilm/norms.hpp"

using namespace thinfilm;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("single-mode closed forms for every norm kind") {
    const double L = 2.0 * pi;
    const BasisSpec basis(BoundaryCondition::Periodic, L, 5);
    SpectralField f(basis);
    f.a[2] = 1.0;  // cos(3x), q = 3

    CHECK(norm(f, NormKind::L2) == doctest::Approx(std::sqrt(L / 2.0)).epsilon(1e-12));
    CHECK(norm_l2_sq(f) == doctest::Approx(L / 2.0).epsilon(1e-12));
    // ||f||_{H^s}^2 = (L/2) q^{2s}
    CHECK(norm(f, NormKind::Hs, 1.0) ==
          doctest::Approx(std::sqrt(L / 2.0) * 3.0).epsilon(1e-12));
    CHECK(norm(f, NormKind::Hs, -2.0) ==
          doctest::Approx(std::sqrt(L / 2.0) / 9.0).epsilon(1e-12));
    CHECK(norm(f, NormKind::Linf) == doctest::Approx(1.0).epsilon(1e-12));
    // grid sup of the derivative samples |sin| off its peak: a few percent low
    CHECK(norm(f, NormKind::C1) <= 4.0 + 1e-12);
    CHECK(norm(f, NormKind::C1) >= 4.0 * 0.97);
    // int cos^4 over full periods = (3/8) L
    CHECK(norm(f, NormKind::L4) == doctest::Approx(std::pow(0.375 * L, 0.25)).epsilon(1e-12));
}

TEST_CASE("Hs exponent is clamped to the symbol range") {
    SpectralField f((BasisSpec(BoundaryCondition::Periodic, 1.0, 2)));
    CHECK_THROWS_AS(norm(f, NormKind::Hs, 4.5), ResolutionError);
    CHECK_THROWS_AS(norm(f, NormKind::Hs, -4.5), ResolutionError);
}

TEST_CASE("norms agree with dense quadrature on a mixed field") {
    const double L = 2.0 * pi;
    const BasisSpec basis(BoundaryCondition::Periodic, L, 3);
    SpectralField f(basis);
    f.a[0] = 0.7;
    f.b[1] = -0.4;
    f.a[2] = 0.1;
    // brute-force oracles on a fine grid
    const std::size_t m = 20000;
    double sup = 0.0, sup1 = 0.0, l2 = 0.0, l4 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = L * static_cast<double>(i) / static_cast<double>(m);
        const double v = 0.7 * std::cos(x) - 0.4 * std::sin(2.0 * x) + 0.1 * std::cos(3.0 * x);
        const double dv = -0.7 * std::sin(x) - 0.8 * std::cos(2.0 * x) - 0.3 * std::sin(3.0 * x);
        sup = std::max(sup, std::abs(v));
        sup1 = std::max(sup1, std::abs(dv));
        l2 += v * v;
        l4 += v * v * v * v;
    }
    l2 = std::sqrt(l2 * L / m);
    l4 = std::pow(l4 * L / m, 0.25);
    CHECK(norm(f, NormKind::L2) == doctest::Approx(l2).epsilon(1e-8));
    CHECK(norm(f, NormKind::L4) == doctest::Approx(l4).epsilon(1e-8));
    // grid sup norms sample 4N+1 points: a lower bound within a few percent
    CHECK(norm(f, NormKind::Linf) <= sup * (1.0 + 1e-12));
    CHECK(norm(f, NormKind::Linf) >= sup * 0.95);
    CHECK(norm(f, NormKind::C1) <= (sup + sup1) * (1.0 + 1e-12));
    CHECK(norm(f, NormKind::C1) >= (sup + sup1) * 0.95);
}

TEST_CASE("neumann norms integrate over [0, L] of the even extension") {
    const double L = pi;
    const BasisSpec basis(BoundaryCondition::Neumann, L, 4);
    SpectralField f(basis);
    f.a[1] = 1.0;  // cos(2x) with q_2 = 2
    CHECK(norm(f, NormKind::L2) == doctest::Approx(std::sqrt(L / 2.0)).epsilon(1e-12));
    CHECK(norm(f, NormKind::L4) == doctest::Approx(std::pow(0.375 * L, 0.25)).epsilon(1e-12));
    CHECK(norm(f, NormKind::Linf) == doctest::Approx(1.0).epsilon(1e-12));
}
