#include "thinfilm/noise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thinfilm/errors.hpp"

namespace thinfilm {

NoiseSpectrum NoiseSpectrum::white(std::size_t modes) {
    NoiseSpectrum s;
    s.alphas.assign(modes, 1.0);
    s.bound = 1.0;
    return s;
}

NoiseSpectrum NoiseSpectrum::from_array(std::vector<double> alphas) {
    NoiseSpectrum s;
    for (double a : alphas)
        if (a < 0.0) throw ResolutionError("NoiseSpectrum: alphas must be nonnegative");
    s.bound = alphas.empty() ? 0.0 : *std::max_element(alphas.begin(), alphas.end());
    s.alphas = std::move(alphas);
    return s;
}

NoiseSpectrum NoiseSpectrum::from_formula(double c, double p, std::size_t modes) {
    if (c < 0.0) throw ResolutionError("NoiseSpectrum: formula amplitude must be nonnegative");
    std::vector<double> a(modes);
    for (std::size_t j = 1; j <= modes; ++j)
        a[j - 1] = c * std::pow(static_cast<double>(j), -p);
    return from_array(std::move(a));
}

bool NoiseSpectrum::is_zero() const {
    return std::all_of(alphas.begin(), alphas.end(), [](double a) { return a == 0.0; });
}

double ou_increment_variance(double lambda, double alpha, double h) {
    if (h <= 0.0) throw ResolutionError("ou step: h must be positive");
    if (std::abs(lambda * h) < 1e-8) return alpha * alpha * h;  // Brownian limit
    return alpha * alpha * std::expm1(2.0 * lambda * h) / (2.0 * lambda);
}

ModeIncrements mild_noise_increment(const BasisSpec& basis, const LinearSpectrum& spectrum,
                                    const NoiseSpectrum& noise, WienerState& rng, double h) {
    if (h <= 0.0) throw ResolutionError("mild_noise_increment: h must be positive");
    const std::size_t n = basis.truncation;
    ModeIncrements eta;
    eta.a.assign(n, 0.0);
    eta.b.assign(n, 0.0);
    const bool periodic = basis.bc == BoundaryCondition::Periodic;
    for (std::size_t j = 1; j <= n; ++j) {
        const double alpha = noise.alphas[j - 1];
        if (alpha == 0.0) continue;
        const double sd = std::sqrt(ou_increment_variance(spectrum[j], alpha, h));
        const std::uint32_t ch = static_cast<std::uint32_t>(2 * (j - 1));
        eta.a[j - 1] = sd * rng.gaussian(ch);
        if (periodic) eta.b[j - 1] = sd * rng.gaussian(ch + 1);
    }
    rng.advance(h);
    return eta;
}

void ou_apply(ConvolutionState& state, const LinearSpectrum& spectrum,
              const ModeIncrements& eta, double h) {
    for (std::size_t j = 1; j <= state.w.modes(); ++j) {
        const double decay = std::exp(spectrum[j] * h);
        state.w.a[j - 1] = decay * state.w.a[j - 1] + eta.a[j - 1];
        state.w.b[j - 1] = decay * state.w.b[j - 1] + eta.b[j - 1];
    }
    state.t += h;
}

ConvolutionState ou_step(ConvolutionState state, const LinearSpectrum& spectrum,
                         const NoiseSpectrum& noise, WienerState& rng, double h) {
    const ModeIncrements eta = mild_noise_increment(state.w.basis, spectrum, noise, rng, h);
    ou_apply(state, spectrum, eta, h);
    return state;
}

ConvolutionState stationary_convolution_sample(const BasisSpec& basis,
                                               const LinearSpectrum& spectrum,
                                               const NoiseSpectrum& noise, WienerState& rng,
                                               const std::vector<std::size_t>& unstable_opt_out) {
    ConvolutionState state(basis);
    const bool periodic = basis.bc == BoundaryCondition::Periodic;
    for (std::size_t j = 1; j <= basis.truncation; ++j) {
        const double alpha = noise.alphas[j - 1];
        if (spectrum[j] >= 0.0) {
            if (std::find(unstable_opt_out.begin(), unstable_opt_out.end(), j) ==
                unstable_opt_out.end())
                throw UnstableModeError("stationary_convolution_sample: mode " +
                                        std::to_string(j) + " has lambda >= 0");
            continue;
        }
        if (alpha == 0.0) continue;
        const double sd = alpha / std::sqrt(-2.0 * spectrum[j]);
        const std::uint32_t ch = static_cast<std::uint32_t>(2 * (j - 1));
        state.w.a[j - 1] = sd * rng.gaussian(ch);
        if (periodic) state.w.b[j - 1] = sd * rng.gaussian(ch + 1);
    }
    rng.advance(0.0);
    return state;
}

} // namespace thinfilm
