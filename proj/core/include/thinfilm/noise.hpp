#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thinfilm/field.hpp"
#include "thinfilm/rng.hpp"
#include "thinfilm/spectrum.hpp"

namespace thinfilm {

// Diagonal noise amplitudes alpha_j per retained mode, alpha_j >= 0 and
// bounded. For Periodic bases the cosine and sine partners of mode j are
// forced independently with the same alpha_j.
struct NoiseSpectrum {
    std::vector<double> alphas;
    double bound = 0.0;  // C_alpha with alpha_j <= C_alpha

    static NoiseSpectrum white(std::size_t modes);
    static NoiseSpectrum from_array(std::vector<double> alphas);
    // alpha_j = c * j^{-p}
    static NoiseSpectrum from_formula(double c, double p, std::size_t modes);

    std::size_t modes() const { return alphas.size(); }
    bool is_zero() const;
};

// Stochastic convolution W_A^N as a spectral field; W_A(0) = 0 at the
// time origin.
struct ConvolutionState {
    SpectralField w;
    double t = 0.0;

    explicit ConvolutionState(const BasisSpec& basis) : w(basis) {}
    ConvolutionState() = default;
};

// One exact-in-distribution Gaussian increment per mode component over a
// step h: variance alpha^2 (e^{2 lambda h} - 1) / (2 lambda), with the
// Brownian limit alpha^2 h for |lambda h| < 1e-8. Advances the stream
// cursor; ou_step consumes the identical draws, which is what couples the
// u-path and the W_A-path to the same noise realization.
struct ModeIncrements {
    std::vector<double> a;
    std::vector<double> b;  // unused (zero) for Neumann bases
};

ModeIncrements mild_noise_increment(const BasisSpec& basis, const LinearSpectrum& spectrum,
                                    const NoiseSpectrum& noise, WienerState& rng, double h);

// W'_j = e^{lambda_j h} W_j + eta_j with a precomputed increment.
void ou_apply(ConvolutionState& state, const LinearSpectrum& spectrum,
              const ModeIncrements& eta, double h);

// Draws increments and applies them; distributionally exact for any h > 0.
ConvolutionState ou_step(ConvolutionState state, const LinearSpectrum& spectrum,
                         const NoiseSpectrum& noise, WienerState& rng, double h);

// Sample W_A from its stationary law, variance alpha_j^2 / (2 |lambda_j|)
// per mode. Modes with lambda_j >= 0 have no stationary law; they throw
// unless listed in `unstable_opt_out` (then left at zero).
ConvolutionState stationary_convolution_sample(const BasisSpec& basis,
                                               const LinearSpectrum& spectrum,
                                               const NoiseSpectrum& noise, WienerState& rng,
                                               const std::vector<std::size_t>& unstable_opt_out = {});

// Closed-form increment variance used above (exposed for tests/oracles).
double ou_increment_variance(double lambda, double alpha, double h);

} // namespace thinfilm
