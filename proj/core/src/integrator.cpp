#include "thinfilm/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thinfilm/analysis.hpp"
#include "thinfilm/nonlinearity.hpp"
#include "thinfilm/norms.hpp"

namespace thinfilm {

bool SimParams::exceeds_step_cap() const {
    const LinearSpectrum s = model.spectrum();
    const double lam_n = std::abs(s.lambdas.back());
    return lam_n > 0.0 && h > 0.5 / lam_n;
}

void SimParams::validate() const {
    if (h <= 0.0) throw ResolutionError("SimParams: h must be positive");
    if (burn_in < 0.0) throw ResolutionError("SimParams: burn_in must be nonnegative");
    if (horizon < burn_in) throw ResolutionError("SimParams: horizon must be >= burn_in");
    if (record_stride < 1) throw ResolutionError("SimParams: record_stride must be >= 1");
}

double SimParams::default_burn_in(const ModelSpec& model, double cap) {
    const double decay = model.spectrum().min_decay();
    if (!std::isfinite(decay) || decay <= 0.0) return cap;
    return std::min(10.0 / decay, cap);
}

TrajectoryState make_initial_state(const SpectralField& init, const ModelSpec& model,
                                   std::uint64_t seed, std::uint32_t trajectory) {
    if (!(init.basis == model.basis))
        throw BasisError("make_initial_state: initial data not in the truncated space");
    TrajectoryState state;
    state.t = 0.0;
    state.u = init;
    state.w_a = ConvolutionState(model.basis);
    state.rng = WienerState{seed, trajectory, 0, 0.0};
    return state;
}

double phi1(double z) {
    if (z == 0.0) return 1.0;
    if (std::abs(z) < 1e-8) return 1.0 + 0.5 * z;
    return std::expm1(z) / z;
}

void etd_step(TrajectoryState& state, const SimParams& params, const LinearSpectrum& spectrum) {
    const double h = params.h;
    const ModelSpec& model = params.model;

    SpectralField drift(model.basis);
    if (params.nonlinearity_enabled) drift = nonlinearity(state.u);

    const ModeIncrements eta =
        mild_noise_increment(model.basis, spectrum, model.noise, state.rng, h);

    for (std::size_t j = 1; j <= state.u.modes(); ++j) {
        const double z = spectrum[j] * h;
        const double decay = std::exp(z);
        const double weight = h * phi1(z);
        state.u.a[j - 1] = decay * state.u.a[j - 1] + weight * drift.a[j - 1] + eta.a[j - 1];
        state.u.b[j - 1] = decay * state.u.b[j - 1] + weight * drift.b[j - 1] + eta.b[j - 1];
    }
    ou_apply(state.w_a, spectrum, eta, h);
    state.t += h;

    const double unorm = norm_l2(state.u);
    if (!std::isfinite(unorm) || unorm > params.blowup_threshold || !state.u.finite())
        throw DivergenceError(state.t, unorm,
                              "trajectory diverged at t = " + std::to_string(state.t) +
                                  ", ||u|| = " + std::to_string(unorm));
}

SpectralField v_field(const TrajectoryState& state,
                      const std::optional<StabilizerProfile>& stabilizer) {
    SpectralField v = state.u;
    v -= state.w_a.w;
    if (stabilizer) v -= stabilizer->Phi;
    return v;
}

namespace {

void update_diagnostics(TrajectoryState& state, const SimParams& params) {
    const SpectralField v = v_field(state, params.stabilizer);
    const double winf = norm(derivative(state.w_a.w, 1), NormKind::Linf);
    const double winf4 = 8.0 * winf * winf * winf * winf;
    const double h2v = norm_l2_sq(derivative(v, 2));
    auto& d = state.diag;
    if (d.primed) {
        const double dt = state.t - d.last_sample_t;
        d.w_integral += 0.5 * dt * (d.last_winf4 + winf4);
        d.h2v_integral += 0.5 * dt * (d.last_h2v + h2v);
    }
    d.last_winf4 = winf4;
    d.last_h2v = h2v;
    d.last_sample_t = state.t;
    d.sup_v_l2 = std::max(d.sup_v_l2, norm_l2(v));
    d.primed = true;
}

} // namespace

TrajectoryResult run_trajectory(const SpectralField& init, const SimParams& params,
                                const std::vector<std::string>& probe_names,
                                std::uint64_t seed, std::uint32_t trajectory) {
    params.validate();
    const LinearSpectrum spectrum = params.model.spectrum();

    TrajectoryResult result;
    result.series.names = probe_names;
    result.series.seed = seed;
    result.series.trajectory = trajectory;
    result.series.model_fingerprint = params.model.fingerprint();

    TrajectoryState state = make_initial_state(init, params.model, seed, trajectory);
    const auto nsteps = static_cast<std::uint64_t>(std::llround(params.horizon / params.h));
    const double record_after = params.burn_in;

    auto maybe_record = [&](std::uint64_t step) {
        if (step % params.record_stride != 0) return;
        const bool past_burn_in =
            record_after == 0.0 ? true : state.t > record_after + 1e-12;
        if (!past_burn_in) return;
        update_diagnostics(state, params);
        if (!probe_names.empty())
            result.series.append(state.t, evaluate_probes(state, params, probe_names));
    };

    maybe_record(0);
    for (std::uint64_t step = 1; step <= nsteps; ++step) {
        // keep t free of accumulated += h drift
        try {
            etd_step(state, params, spectrum);
        } catch (const DivergenceError& e) {
            result.series.divergence_time = e.t;
            result.divergence = e;
            result.final_state = std::move(state);
            return result;
        }
        state.t = params.h * static_cast<double>(step);
        state.w_a.t = state.t;
        maybe_record(step);
    }
    result.final_state = std::move(state);
    return result;
}

double w_functional(const std::vector<double>& times, const std::vector<double>& dxwa_inf,
                    double s, double t) {
    if (times.size() < 2 || times.size() != dxwa_inf.size())
        throw IndexError("w_functional: need a recorded series");
    if (s >= t) throw IndexError("w_functional: need s < t");
    auto snap = [&](double x) -> std::size_t {
        std::size_t best = 0;
        double bestd = std::abs(times[0] - x);
        for (std::size_t i = 1; i < times.size(); ++i) {
            const double d = std::abs(times[i] - x);
            if (d < bestd) {
                bestd = d;
                best = i;
            }
        }
        const double spacing = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
        if (bestd > 0.5 * spacing + 1e-9)
            throw IndexError("w_functional: interval endpoint outside recorded range");
        return best;
    };
    const std::size_t i0 = snap(s);
    const std::size_t i1 = snap(t);
    if (i0 >= i1) throw IndexError("w_functional: degenerate snapped interval");
    double acc = 0.0;
    auto integrand = [&](std::size_t i) {
        const double y = dxwa_inf[i];
        return 8.0 * y * y * y * y;
    };
    for (std::size_t i = i0; i < i1; ++i)
        acc += 0.5 * (times[i + 1] - times[i]) * (integrand(i) + integrand(i + 1));
    return acc;
}

double AprioriReport::tail_probability(double threshold) const {
    if (path_functionals.empty()) return 0.0;
    std::size_t hits = 0;
    for (double v : path_functionals)
        if (v > threshold) ++hits;
    return static_cast<double>(hits) / static_cast<double>(path_functionals.size());
}

AprioriReport apriori_check(const std::vector<ObservableSeries>& runs, const ModelSpec& model) {
    AprioriReport report;
    const LinearSpectrum spectrum = model.spectrum();
    report.alpha = -spectrum[1];
    if (report.alpha <= 0.0)
        throw ResolutionError("apriori_check: needs a stable (or stabilized) configuration");

    for (const auto& series : runs) {
        if (series.rows() < 2)
            throw ResolutionError("apriori_check: insufficient recorded data");
        const auto v2 = series.column_values(probe::v_l2_sq);
        const auto winf = series.column_values(probe::dxwa_inf);
        const auto h2v = series.column_values(probe::d2v_l2_sq);
        const double t0 = series.times.front();
        const double v0 = v2.front();

        double c = 0.0;
        double w_cum = 0.0;
        double h2_cum = 0.0;
        double sup_v = std::sqrt(std::max(v0, 0.0));
        for (std::size_t i = 1; i < series.rows(); ++i) {
            const double dt = series.times[i] - series.times[i - 1];
            auto wint = [&](std::size_t k) {
                const double y = winf[k];
                return 8.0 * y * y * y * y;
            };
            w_cum += 0.5 * dt * (wint(i - 1) + wint(i));
            h2_cum += 0.5 * dt * (h2v[i - 1] + h2v[i]);
            const double t = series.times[i] - t0;
            const double decay_term = std::exp(-report.alpha * t + w_cum) * v0;
            const double envelope = std::exp(w_cum) * (w_cum + t);
            if (envelope > 0.0)
                c = std::max(c, (v2[i] - decay_term) / envelope);
            sup_v = std::max(sup_v, std::sqrt(std::max(v2[i], 0.0)));
        }
        report.per_traj_c.push_back(c);
        report.path_functionals.push_back(sup_v + std::sqrt(std::max(h2_cum, 0.0)));
    }
    report.fitted_c = report.per_traj_c.empty()
                          ? 0.0
                          : *std::max_element(report.per_traj_c.begin(), report.per_traj_c.end());
    return report;
}

OrderCheckReport deterministic_order_check(const SpectralField& init, SimParams params) {
    params.model.noise = NoiseSpectrum::from_array(
        std::vector<double>(params.model.basis.truncation, 0.0));
    params.burn_in = params.horizon;  // no recording, final state only

    auto final_state = [&](double h) {
        SimParams p = params;
        p.h = h;
        const TrajectoryResult r = run_trajectory(init, p, {}, 0, 0);
        if (r.diverged()) throw SolverError("deterministic_order_check: reference run diverged");
        return r.final_state.u;
    };

    OrderCheckReport report;
    const SpectralField ref = final_state(params.h / 64.0);
    const double scale = std::max(norm_l2(ref), 1e-30);
    for (int k = 0; k < 4; ++k) {
        const double h = params.h / static_cast<double>(1 << k);
        report.steps.push_back(h);
        report.errors.push_back(norm_l2(final_state(h) - ref));
    }
    report.slope_valid =
        std::all_of(report.errors.begin(), report.errors.end(),
                    [&](double e) { return e > 1e-12 * scale; });
    if (report.slope_valid) {
        double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
        const double n = static_cast<double>(report.steps.size());
        for (std::size_t i = 0; i < report.steps.size(); ++i) {
            const double x = std::log(report.steps[i]);
            const double y = std::log(report.errors[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return report;
}

} // namespace thinfilm
