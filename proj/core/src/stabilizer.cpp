#include "thinfilm/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "thinfilm/errors.hpp"
#include "thinfilm/norms.hpp"
#include "thinfilm/rng.hpp"
#include "thinfilm/spectrum.hpp"
#include "thinfilm/transform.hpp"

namespace thinfilm {

GammaCertificate gamma_sum(std::size_t n_star, double length, std::size_t m_max) {
    if (n_star < 1) throw ResolutionError("gamma_sum: n_star must be >= 1");
    if (m_max < 4 * n_star) throw ResolutionError("gamma_sum: m_max must be >= 4*n_star");
    GammaCertificate cert;
    cert.n_star = n_star;
    cert.length = length;
    const double pi = std::numbers::pi;
    cert.alpha = 2.0 * pi * pi / (length * length);
    const double a2 = cert.alpha * cert.alpha;

    // Nonzero terms sit exactly on {k > m > 0 : k - m <= 2 n_* < k + m},
    // each worth 4 / (alpha^2 k^2 m^2).
    const std::size_t two_ns = 2 * n_star;
    double sum = 0.0;
    for (std::size_t m = 1; m <= m_max; ++m) {
        const std::size_t k_lo = std::max(m + 1, (two_ns + 1 > m) ? two_ns + 1 - m : 1);
        const std::size_t k_hi = m + two_ns;
        for (std::size_t k = k_lo; k <= k_hi; ++k) {
            const double km = static_cast<double>(k) * static_cast<double>(m);
            sum += 4.0 / (a2 * km * km);
        }
    }
    cert.computed_sum = sum;
    // For m > m_max the inner sum has at most 2 n_* terms, each at most
    // 4/(alpha^2 m^4); integral comparison gives the m_max^-3 envelope.
    const double mm = static_cast<double>(m_max);
    cert.tail_bound = 32.0 * static_cast<double>(n_star) / (3.0 * a2 * mm * mm * mm);
    cert.paper_bound = 4.0 * pi * pi / (3.0 * a2 * static_cast<double>(n_star));
    return cert;
}

StabilizerProfile build_phi(std::size_t n_star, double nu, double length,
                            std::size_t truncation) {
    if (nu >= 0.0)
        throw UnstableModeError("build_phi: stabilizer not needed for nu >= 0");
    if (n_star < 1) throw ResolutionError("build_phi: n_star must be >= 1");

    StabilizerProfile p;
    p.n_star = n_star;
    p.nu = nu;
    const std::size_t count = 2 * n_star;
    p.psi.resize(count);
    p.phi_coeffs.resize(count);
    for (std::size_t n = 1; n <= count; ++n) {
        p.psi[n - 1] = 2.0;
        p.phi_coeffs[n - 1] = p.psi[n - 1] / (static_cast<double>(n) * static_cast<double>(n));
    }

    // Phi modes live at 2*pi*n/L, which on the Neumann evolution basis
    // (q_j = pi*j/L) is mode index j = 2n.
    const BasisSpec basis(BoundaryCondition::Neumann, length, truncation);
    p.Phi = SpectralField(basis);
    double residual_sq = 0.0;
    const double amp = 2.0 * std::abs(nu);
    for (std::size_t n = 1; n <= count; ++n) {
        const double coeff = amp * p.phi_coeffs[n - 1];
        const std::size_t j = 2 * n;
        if (j <= truncation)
            p.Phi.a[j - 1] = coeff;
        else
            residual_sq += 0.5 * length * coeff * coeff;
    }
    p.truncation_residual = std::sqrt(residual_sq);
    p.gamma = gamma_sum(n_star, length, 8 * n_star);
    return p;
}

namespace {

// Cosine-mode amplitudes c_n of dx^2 Phi = sum_n c_n cos(2 pi n x / L).
std::vector<double> potential_modes(const StabilizerProfile& profile) {
    const double L = profile.Phi.basis.length;
    const double f = 2.0 * std::numbers::pi / L;
    std::vector<double> c(profile.psi.size());
    for (std::size_t n = 1; n <= profile.psi.size(); ++n)
        c[n - 1] = -2.0 * std::abs(profile.nu) * profile.psi[n - 1] * f * f;
    return c;
}

} // namespace

double hphi_min_eigenvalue(const StabilizerProfile& profile, std::size_t grid_modes) {
    if (grid_modes < 64) throw ResolutionError("hphi_min_eigenvalue: need at least 64 modes");
    const double L = profile.Phi.basis.length;
    const double pi = std::numbers::pi;
    const std::vector<double> c = potential_modes(profile);

    // H in the orthonormal Dirichlet sine basis s_m = sqrt(2/L) sin(pi m x/L):
    //   kinetic: (1/2)(pi m / L)^2 on the diagonal,
    //   potential cos(2 pi n x/L) couples |m - m'| = 2n (+) and m + m' = 2n (-).
    const auto M = static_cast<Eigen::Index>(grid_modes);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(M, M);
    for (Eigen::Index m = 1; m <= M; ++m) {
        const double q = pi * static_cast<double>(m) / L;
        H(m - 1, m - 1) = 0.5 * q * q;
    }
    for (std::size_t n = 1; n <= c.size(); ++n) {
        const double half = 0.5 * c[n - 1];
        const auto two_n = static_cast<Eigen::Index>(2 * n);
        for (Eigen::Index m = 1; m <= M; ++m) {
            const Eigen::Index md = m + two_n;  // |m' - m| = 2n, upper side
            if (md <= M) {
                H(m - 1, md - 1) += half;
                H(md - 1, m - 1) += half;
            }
            const Eigen::Index ms = two_n - m;  // m + m' = 2n
            if (ms >= 1 && ms <= M) H(m - 1, ms - 1) -= half;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(H, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw SolverError("hphi_min_eigenvalue: eigen-solver failed");
    return solver.eigenvalues().minCoeff();
}

HphiReport hphi_min_eigenvalue_checked(const StabilizerProfile& profile, std::size_t grid_modes) {
    HphiReport r;
    r.min_eigenvalue = hphi_min_eigenvalue(profile, grid_modes);
    r.min_eigenvalue_fine = hphi_min_eigenvalue(profile, 2 * grid_modes);
    r.richardson_drift = std::abs(r.min_eigenvalue - r.min_eigenvalue_fine) /
                         std::max(std::abs(r.min_eigenvalue_fine), 1e-300);
    return r;
}

std::size_t select_n_star(double length, double nu, double target_c, const SelectOptions& opts) {
    if (target_c <= 0.0) throw ResolutionError("select_n_star: target C must be positive");
    if (nu >= 0.0) throw UnstableModeError("select_n_star: stabilizer not needed for nu >= 0");
    // exact linear scan for small n_star, doubling beyond 64
    for (std::size_t n_star = 1; n_star <= opts.max_n_star;
         n_star = (n_star < 64 ? n_star + 1 : n_star * 2)) {
        const GammaCertificate cert = gamma_sum(n_star, length, 8 * n_star);
        if (!cert.holds()) continue;
        if (cert.total() * cert.alpha * cert.alpha > opts.gamma_max_scaled) continue;
        const std::size_t trunc =
            opts.truncation ? opts.truncation : std::max<std::size_t>(4 * n_star + 8, 32);
        const StabilizerProfile profile = build_phi(n_star, nu, length, trunc);
        const double min_eig = hphi_min_eigenvalue(profile, opts.grid_modes);
        if (min_eig >= target_c * (1.0 + opts.eigen_margin)) return n_star;
    }
    throw SolverError("select_n_star: no n_star <= " + std::to_string(opts.max_n_star) +
                      " satisfies the certificate");
}

namespace {

struct FormEvaluator {
    const StabilizerProfile* profile;  // may be null (Phi = 0)
    double nu;
    BasisSpec basis;
    std::vector<double> potential;  // dx^2 Phi on the quadrature grid
    std::size_t grid = 0;

    FormEvaluator(const StabilizerProfile* p, double nu_, double length, std::size_t truncation)
        : profile(p), nu(nu_), basis(BoundaryCondition::Neumann, length, truncation) {
        const std::size_t phi_modes = p ? 2 * p->n_star : 0;
        grid = 4 * (truncation + 2 * phi_modes) + 1;
        potential.assign(grid, 0.0);
        if (p) {
            const std::vector<double> c = potential_modes(*p);
            const double P = basis.period();
            for (std::size_t i = 0; i < grid; ++i) {
                const double x = P * static_cast<double>(i) / static_cast<double>(grid);
                double v = 0.0;
                for (std::size_t n = 1; n <= c.size(); ++n)
                    v += c[n - 1] * std::cos(2.0 * std::numbers::pi *
                                             (2.0 * static_cast<double>(n)) * x / P);
                potential[i] = v;
            }
        }
    }

    // R(v) = (||dx^2 v||^2 + nu ||dx v||^2 + <dx v, (dx^2 Phi) dx v>) / ||dx^2 v||^2
    double ratio(const SpectralField& v) const {
        const SpectralField dv = derivative(v, 1);
        const double d2 = norm_l2_sq(derivative(v, 2));
        if (d2 <= 0.0) throw ResolutionError("tilde_a_form_check: degenerate test field");
        double num = d2 + nu * norm_l2_sq(dv);
        if (profile) {
            const GridBuffer g = to_physical(dv, grid);
            double s = 0.0;
            for (std::size_t i = 0; i < grid; ++i) s += g.values[i] * g.values[i] * potential[i];
            num += s * basis.length / static_cast<double>(grid);
        }
        return num / d2;
    }
};

FormCheckReport run_form_check(const FormEvaluator& eval, std::size_t samples,
                               std::size_t truncation, std::uint64_t seed) {
    FormCheckReport report;
    report.samples = samples;
    double min_ratio = std::numeric_limits<double>::infinity();

    // Deterministic worst-case sweep: single modes and +/- pairs.
    SpectralField v(eval.basis);
    for (std::size_t j = 1; j <= truncation; ++j) {
        std::fill(v.a.begin(), v.a.end(), 0.0);
        v.a[j - 1] = 1.0;
        min_ratio = std::min(min_ratio, eval.ratio(v));
    }
    for (std::size_t j = 1; j <= truncation; ++j)
        for (std::size_t k = j + 1; k <= truncation; ++k)
            for (double sign : {1.0, -1.0}) {
                std::fill(v.a.begin(), v.a.end(), 0.0);
                v.a[j - 1] = 1.0;
                v.a[k - 1] = sign;
                min_ratio = std::min(min_ratio, eval.ratio(v));
            }

    // Random zero-mean Neumann fields with mildly decaying spectrum.
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t j = 1; j <= truncation; ++j)
            v.a[j - 1] = gaussian_draw(seed, static_cast<std::uint32_t>(s),
                                       static_cast<std::uint32_t>(j), 0) /
                         static_cast<double>(j);
        min_ratio = std::min(min_ratio, eval.ratio(v));
    }

    report.min_ratio = min_ratio;
    report.c_estimate = min_ratio;
    report.pass = min_ratio > 0.0;
    return report;
}

} // namespace

FormCheckReport tilde_a_form_check(const StabilizerProfile& profile, std::size_t samples,
                                   std::size_t truncation, std::uint64_t seed) {
    const FormEvaluator eval(&profile, profile.nu, profile.Phi.basis.length, truncation);
    return run_form_check(eval, samples, truncation, seed);
}

FormCheckReport tilde_a_form_check_unshifted(double nu, double length, std::size_t samples,
                                             std::size_t truncation, std::uint64_t seed) {
    const FormEvaluator eval(nullptr, nu, length, truncation);
    return run_form_check(eval, samples, truncation, seed);
}

} // namespace thinfilm
