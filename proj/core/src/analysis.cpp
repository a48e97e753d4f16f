#include "thinfilm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "thinfilm/nonlinearity.hpp"
#include "thinfilm/norms.hpp"
#include "thinfilm/transform.hpp"

namespace thinfilm {

namespace probe {
std::vector<std::string> all() {
    return {mass,   u_l2_sq, dxu_l2_sq, d2v_l2_sq, v_l2_sq,  u_c1,
            log_u_l2, log_u_c1, dxwa_inf, dxwa_inf4, dxwa_l4_4, orth_residual};
}
} // namespace probe

std::vector<double> evaluate_probes(const TrajectoryState& state, const SimParams& params,
                                    const std::vector<std::string>& names) {
    // lazily computed shared intermediates
    std::optional<SpectralField> v;
    std::optional<SpectralField> dxwa;
    auto get_v = [&]() -> const SpectralField& {
        if (!v) v = v_field(state, params.stabilizer);
        return *v;
    };
    auto get_dxwa = [&]() -> const SpectralField& {
        if (!dxwa) dxwa = derivative(state.w_a.w, 1);
        return *dxwa;
    };

    std::vector<double> row;
    row.reserve(names.size());
    for (const auto& name : names) {
        if (name == probe::mass) {
            row.push_back(mass(to_physical(state.u, 4 * state.u.modes() + 1)));
        } else if (name == probe::u_l2_sq) {
            row.push_back(norm_l2_sq(state.u));
        } else if (name == probe::dxu_l2_sq) {
            row.push_back(norm_l2_sq(derivative(state.u, 1)));
        } else if (name == probe::d2v_l2_sq) {
            row.push_back(norm_l2_sq(derivative(get_v(), 2)));
        } else if (name == probe::v_l2_sq) {
            row.push_back(norm_l2_sq(get_v()));
        } else if (name == probe::u_c1) {
            row.push_back(norm(state.u, NormKind::C1));
        } else if (name == probe::log_u_l2) {
            row.push_back(std::log1p(norm_l2_sq(state.u)));
        } else if (name == probe::log_u_c1) {
            const double c1 = norm(state.u, NormKind::C1);
            row.push_back(std::log1p(c1 * c1));
        } else if (name == probe::dxwa_inf) {
            row.push_back(norm(get_dxwa(), NormKind::Linf));
        } else if (name == probe::dxwa_inf4) {
            const double y = norm(get_dxwa(), NormKind::Linf);
            row.push_back(y * y * y * y);
        } else if (name == probe::dxwa_l4_4) {
            const double y = norm(get_dxwa(), NormKind::L4);
            row.push_back(y * y * y * y);
        } else if (name == probe::orth_residual) {
            row.push_back(orthogonality_residual(state.u));
        } else {
            throw IndexError("evaluate_probes: unknown probe " + name);
        }
    }
    return row;
}

SpectralField k_weight(const SpectralField& f, double exponent) {
    SpectralField out = f;
    for (std::size_t j = 1; j <= f.modes(); ++j) {
        const double w = std::pow(static_cast<double>(j), exponent);
        out.a[j - 1] *= w;
        out.b[j - 1] *= w;
    }
    return out;
}

// ---- stationary scan -----------------------------------------------------

bool LogMomentReport::agrees_within(double n_sigma) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const auto& a = entries[i];
            const auto& b = entries[j];
            const double se_l2 = std::hypot(a.se_log_l2, b.se_log_l2);
            const double se_c1 = std::hypot(a.se_log_c1, b.se_log_c1);
            if (std::abs(a.mean_log_l2 - b.mean_log_l2) > n_sigma * se_l2) return false;
            if (std::abs(a.mean_log_c1 - b.mean_log_c1) > n_sigma * se_c1) return false;
        }
    return true;
}

LogMomentReport stationary_scan(const std::vector<std::size_t>& truncations,
                                const ModelSpec& base_model, const ScanParams& params) {
    LogMomentReport report;
    for (std::size_t n : truncations) {
        ModelSpec model = base_model;
        model.basis = BasisSpec(base_model.basis.bc, base_model.basis.length, n);
        if (base_model.noise.alphas.size() >= n)
            model.noise = NoiseSpectrum::from_array(std::vector<double>(
                base_model.noise.alphas.begin(),
                base_model.noise.alphas.begin() + static_cast<std::ptrdiff_t>(n)));
        else
            model.noise = NoiseSpectrum::white(n);

        SimParams sim;
        sim.h = params.h;
        sim.horizon = params.horizon;
        sim.burn_in = params.burn_in;
        sim.record_stride = params.record_stride;
        sim.model = model;

        LogMomentEntry entry;
        entry.truncation = n;
        std::vector<double> avg_l2;
        std::vector<double> avg_c1;
        const SpectralField zero(model.basis);
        for (std::size_t traj = 0; traj < params.ensemble; ++traj) {
            const TrajectoryResult r = run_trajectory(
                zero, sim, {probe::log_u_l2, probe::log_u_c1}, params.seed,
                static_cast<std::uint32_t>(traj));
            if (r.diverged()) {
                entry.diverged = true;
                break;
            }
            const auto l2 = r.series.column_values(probe::log_u_l2);
            const auto c1 = r.series.column_values(probe::log_u_c1);
            auto mean = [](const std::vector<double>& v) {
                double s = 0.0;
                for (double x : v) s += x;
                return s / static_cast<double>(v.size());
            };
            avg_l2.push_back(mean(l2));
            avg_c1.push_back(mean(c1));
        }
        if (!entry.diverged) {
            auto stats = [](const std::vector<double>& v, double& m, double& se) {
                m = 0.0;
                for (double x : v) m += x;
                m /= static_cast<double>(v.size());
                double s2 = 0.0;
                for (double x : v) s2 += (x - m) * (x - m);
                s2 /= static_cast<double>(v.size() - 1);
                se = std::sqrt(s2 / static_cast<double>(v.size()));
            };
            stats(avg_l2, entry.mean_log_l2, entry.se_log_l2);
            stats(avg_c1, entry.mean_log_c1, entry.se_log_c1);
            entry.trajectories = avg_l2.size();
        }
        report.entries.push_back(entry);
    }

    // systematic growth: means strictly increasing in N and the total rise
    // exceeding its pooled uncertainty
    if (report.entries.size() >= 2) {
        bool increasing = true;
        for (std::size_t i = 1; i < report.entries.size(); ++i)
            increasing = increasing &&
                         report.entries[i].mean_log_l2 > report.entries[i - 1].mean_log_l2;
        const auto& first = report.entries.front();
        const auto& last = report.entries.back();
        const double rise = last.mean_log_l2 - first.mean_log_l2;
        const double se = std::hypot(first.se_log_l2, last.se_log_l2);
        report.monotone_growth_flag = increasing && rise > 3.0 * se;
    }
    return report;
}

RefinementReport refinement_check(const std::vector<std::size_t>& truncations,
                                  const ModelSpec& base_model, double h, double horizon,
                                  std::uint64_t seed) {
    RefinementReport report;
    report.truncations = truncations;
    for (std::size_t n : truncations) {
        auto make = [&](std::size_t modes) {
            ModelSpec m = base_model;
            m.basis = BasisSpec(base_model.basis.bc, base_model.basis.length, modes);
            m.noise = NoiseSpectrum::white(modes);
            SimParams p;
            p.h = h;
            p.horizon = horizon;
            p.model = m;
            return p;
        };
        const SimParams coarse = make(n);
        const SimParams fine = make(2 * n);
        const LinearSpectrum sc = coarse.model.spectrum();
        const LinearSpectrum sf = fine.model.spectrum();
        TrajectoryState uc = make_initial_state(SpectralField(coarse.model.basis),
                                                coarse.model, seed, 0);
        TrajectoryState uf = make_initial_state(SpectralField(fine.model.basis),
                                                fine.model, seed, 0);
        const auto nsteps = static_cast<std::uint64_t>(std::llround(horizon / h));
        double sup = 0.0;
        try {
            for (std::uint64_t step = 0; step < nsteps; ++step) {
                etd_step(uc, coarse, sc);
                etd_step(uf, fine, sf);
                const SpectralField diff = uc.u - project(uf.u, uc.u.basis);
                sup = std::max(sup, norm_l2(diff));
            }
        } catch (const DivergenceError&) {
            report.diverged = true;
            return report;
        }
        report.sup_distances.push_back(sup);
    }
    report.pass = report.sup_distances.size() == truncations.size();
    for (std::size_t i = 1; i < report.sup_distances.size(); ++i)
        report.pass = report.pass && report.sup_distances[i] < report.sup_distances[i - 1];
    return report;
}

// ---- stochastic-convolution experiments ----------------------------------

namespace {

// Direct sample of W_A(t) started from W_A(0) = 0: independent centered
// Gaussians with variance alpha^2 (1 - e^{2 lambda t}) / (2 |lambda|).
SpectralField sample_convolution_at(const ModelSpec& model, const LinearSpectrum& spectrum,
                                    double t, std::uint64_t seed, std::uint32_t traj,
                                    std::uint64_t t_index) {
    SpectralField w(model.basis);
    const bool periodic = model.basis.bc == BoundaryCondition::Periodic;
    for (std::size_t j = 1; j <= model.basis.truncation; ++j) {
        const double alpha = model.noise.alphas[j - 1];
        if (alpha == 0.0) continue;
        const double lam = spectrum[j];
        const double var = alpha * alpha *
                           (lam == 0.0 ? t : -std::expm1(2.0 * lam * t) / (2.0 * -lam));
        const double sd = std::sqrt(std::max(var, 0.0));
        const std::uint32_t ch = static_cast<std::uint32_t>(2 * (j - 1));
        w.a[j - 1] = sd * gaussian_draw(seed, traj, ch, t_index);
        if (periodic) w.b[j - 1] = sd * gaussian_draw(seed, traj, ch + 1, t_index);
    }
    return w;
}

} // namespace

double Lemma61Report::c_hat_spread() const {
    const auto [lo, hi] = std::minmax_element(c_hat.begin(), c_hat.end());
    return *lo > 0.0 ? *hi / *lo : std::numeric_limits<double>::infinity();
}

Lemma61Report lemma61_experiment(const std::vector<double>& t_grid, std::size_t samples,
                                 const ModelSpec& base_model,
                                 const std::vector<std::size_t>& truncations,
                                 std::uint64_t seed) {
    if (t_grid.empty()) throw ResolutionError("lemma61_experiment: empty time grid");
    for (double t : t_grid)
        if (!(t > 0.0 && t <= 1.0))
            throw ResolutionError("lemma61_experiment: t values must lie in (0,1]");

    Lemma61Report report;
    report.t_grid = t_grid;
    report.truncations = truncations;
    for (std::size_t n : truncations) {
        ModelSpec model = base_model;
        model.basis = BasisSpec(base_model.basis.bc, base_model.basis.length, n);
        model.noise = NoiseSpectrum::white(n);
        const LinearSpectrum spectrum = model.spectrum();
        if (!spectrum.all_stable())
            throw UnstableModeError("lemma61_experiment: needs all lambda_j < 0");

        std::vector<double> est(t_grid.size(), 0.0);
        std::vector<double> se(t_grid.size(), 0.0);
        for (std::size_t ti = 0; ti < t_grid.size(); ++ti) {
            EnsembleStats::Probe acc;
            for (std::size_t s = 0; s < samples; ++s) {
                const SpectralField w = sample_convolution_at(
                    model, spectrum, t_grid[ti], seed, static_cast<std::uint32_t>(s), ti);
                const double y = norm(derivative(w, 1), NormKind::Linf);
                acc.add(y * y * y * y);
            }
            est[ti] = acc.mean;
            se[ti] = acc.stderr_mean();
        }
        report.estimates.push_back(est);
        report.std_errors.push_back(se);

        double c = 0.0;
        for (std::size_t ti = 0; ti < t_grid.size(); ++ti)
            c = std::max(c, est[ti] / std::pow(t_grid[ti], 0.125));
        report.c_hat.push_back(c);
    }
    return report;
}

KWeightMomentReport k_weight_moment(double t, std::size_t samples, const ModelSpec& model,
                                    std::uint64_t seed) {
    if (!(t > 0.0 && t <= 1.0))
        throw ResolutionError("k_weight_moment: t must lie in (0,1]");
    const LinearSpectrum spectrum = model.spectrum();

    KWeightMomentReport report;
    report.t = t;

    // probe point roughly a third of the way into the domain, on-grid
    const std::size_t grid = 4 * model.basis.truncation + 1;
    const std::size_t ix = grid / 3;
    const double x = model.basis.period() * static_cast<double>(ix) / static_cast<double>(grid);

    EnsembleStats::Probe l4_acc;
    EnsembleStats::Probe pt_acc;  // squared point values
    for (std::size_t s = 0; s < samples; ++s) {
        const SpectralField w = sample_convolution_at(model, spectrum, t, seed,
                                                      static_cast<std::uint32_t>(s), 0);
        const SpectralField kd = k_weight(derivative(w, 1));
        const double l4 = norm(kd, NormKind::L4);
        l4_acc.add(l4 * l4 * l4 * l4);

        double val = 0.0;
        for (std::size_t j = 1; j <= kd.modes(); ++j) {
            const double q = wavenumber(kd.basis, j);
            val += kd.a[j - 1] * std::cos(q * x) + kd.b[j - 1] * std::sin(q * x);
        }
        pt_acc.add(val * val);
    }
    report.l4_fourth_moment = l4_acc.mean;
    report.l4_fourth_moment_se = l4_acc.stderr_mean();
    report.pointwise_variance = pt_acc.mean;
    report.pointwise_variance_se = pt_acc.stderr_mean();

    // mode-sum oracle: Var = sum_j alpha_j^2 |K dx e_j(x)|^2 (1-e^{2 lam t})/(2|lam|)
    double exact = 0.0;
    const bool periodic = model.basis.bc == BoundaryCondition::Periodic;
    for (std::size_t j = 1; j <= model.basis.truncation; ++j) {
        const double alpha = model.noise.alphas[j - 1];
        if (alpha == 0.0) continue;
        const double lam = spectrum[j];
        const double var = alpha * alpha * -std::expm1(2.0 * lam * t) / (2.0 * -lam);
        const double q = wavenumber(model.basis, j);
        const double kw = std::pow(static_cast<double>(j), 0.375);
        const double c = std::cos(q * x);
        const double s = std::sin(q * x);
        // dx of the cosine partner contributes -q sin, of the sine partner +q cos
        double shape = q * q * s * s;
        if (periodic) shape += q * q * c * c;
        exact += var * kw * kw * shape;
    }
    report.pointwise_variance_exact = exact;
    report.variance_over_t116 = report.pointwise_variance / std::pow(t, 1.0 / 16.0);
    return report;
}

// ---- log-moment inequality ----------------------------------------------

double lemma62_constant(double eps, double k_bound) {
    // quadratic remainder: E (W1 + log(1+e^{W2-W1}/x))^2 <= 6K + 2 for x >= 1.
    // The cross term 2 log x * E_x is split at x0: for x >= x0(eps') with
    // eps' = eps/3 one has E_x <= 2eps' + eps' log(1+eps') <= eps; below x0
    // it is dumped into the constant via E_x <= E_1 <= log 2 + sqrt(K).
    const double eps_prime = eps / 3.0;
    const double x0 = std::exp(1.0 + 2.0 * k_bound / eps_prime) / eps_prime;
    const double e1_bound = std::numbers::ln2 + std::sqrt(k_bound);
    return 6.0 * k_bound + 2.0 + 2.0 * std::log(x0) * e1_bound;
}

Lemma62Report lemma62_check(const std::vector<double>& x_grid, double k_bound, double eps,
                            std::size_t samples, std::uint64_t seed) {
    for (double x : x_grid)
        if (x < 1.0) throw ResolutionError("lemma62_check: x must be >= 1");

    Lemma62Report report;
    report.k_bound = k_bound;
    report.eps = eps;
    report.constant = lemma62_constant(eps, k_bound);
    report.x_grid = x_grid;

    const double sd = std::sqrt(k_bound / 2.0);  // W1, W2 iid N(0, K/2)

    // verify the moment precondition E(W1^2 + W2^2) <= K empirically
    EnsembleStats::Probe moment;
    for (std::size_t s = 0; s < std::min<std::size_t>(samples, 100000); ++s) {
        const double w1 = sd * gaussian_draw(seed, 0, 0, s);
        const double w2 = sd * gaussian_draw(seed, 0, 1, s);
        moment.add(w1 * w1 + w2 * w2);
    }
    report.moment_precondition_ok =
        moment.mean <= k_bound + 3.0 * moment.stderr_mean();
    if (!report.moment_precondition_ok)
        throw ResolutionError("lemma62_check: moment precondition violated");

    double min_margin = std::numeric_limits<double>::infinity();
    double min_margin_sigma = std::numeric_limits<double>::infinity();
    for (double x : x_grid) {
        EnsembleStats::Probe lhs;
        const double lx = std::log(x);
        for (std::size_t s = 0; s < samples; ++s) {
            const double w1 = sd * gaussian_draw(seed, 1, 0, s);
            const double w2 = sd * gaussian_draw(seed, 1, 1, s);
            // log(x e^{w1} + e^{w2}) computed in a overflow-safe form
            const double a = lx + w1;
            const double big = std::max(a, w2);
            const double v = big + std::log1p(std::exp(std::min(a, w2) - big));
            lhs.add(v * v);
        }
        const double rhs = lx * lx + 2.0 * eps * lx + report.constant;  // E W1 = 0
        report.lhs.push_back(lhs.mean);
        report.lhs_se.push_back(lhs.stderr_mean());
        report.rhs.push_back(rhs);
        const double margin = rhs - lhs.mean;
        if (margin < min_margin) {
            min_margin = margin;
            min_margin_sigma = margin / std::max(lhs.stderr_mean(), 1e-300);
        }
    }
    report.min_margin = min_margin;
    report.min_margin_sigma = min_margin_sigma;
    return report;
}

} // namespace thinfilm
