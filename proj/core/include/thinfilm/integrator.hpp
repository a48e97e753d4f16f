#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinfilm/model.hpp"
#include "thinfilm/noise.hpp"
#include "thinfilm/series.hpp"
#include "thinfilm/stabilizer.hpp"

namespace thinfilm {

struct SimParams {
    double h = 1e-3;
    double horizon = 1.0;       // T
    double burn_in = 0.0;
    ModelSpec model;
    std::optional<StabilizerProfile> stabilizer;
    std::size_t record_stride = 1;
    bool nonlinearity_enabled = true;
    double blowup_threshold = 1e8;

    // Recommended step cap 0.5/|lambda_N|; exceeding it is a warning, not
    // an error (the linear flow is integrated exactly).
    bool exceeds_step_cap() const;
    void validate() const;  // throws on h <= 0, T < burn_in, burn_in < 0
    static double default_burn_in(const ModelSpec& model, double cap);
};

// Full resumable simulation state. The running accumulators feed the
// a-priori diagnostics: W-integral of 8||dx W_A||_inf^4, the L2(0,T;H2)
// integral of v, and sup_t ||v||.
struct DiagnosticAccumulators {
    double w_integral = 0.0;
    double h2v_integral = 0.0;
    double sup_v_l2 = 0.0;
    double last_winf4 = 0.0;  // previous 8||dx W_A||_inf^4 sample
    double last_h2v = 0.0;    // previous ||dx^2 v||^2 sample
    double last_sample_t = 0.0;
    bool primed = false;
};

struct TrajectoryState {
    double t = 0.0;
    SpectralField u;
    ConvolutionState w_a;
    WienerState rng;
    DiagnosticAccumulators diag;
};

TrajectoryState make_initial_state(const SpectralField& init, const ModelSpec& model,
                                   std::uint64_t seed, std::uint32_t trajectory = 0);

// Exponential Euler step on the variation-of-constants form: per mode
//   u' = e^{lambda h} u + h phi1(lambda h) B(u) + eta,
// with phi1(z) = (e^z - 1)/z and eta the exact stochastic-convolution
// increment; W_A advances by ou_apply on the same draws. Throws
// DivergenceError when the field blows up.
void etd_step(TrajectoryState& state, const SimParams& params, const LinearSpectrum& spectrum);

double phi1(double z);

// u - W_A (- Phi_N when a stabilizer is supplied).
SpectralField v_field(const TrajectoryState& state,
                      const std::optional<StabilizerProfile>& stabilizer = std::nullopt);

struct TrajectoryResult {
    ObservableSeries series;
    TrajectoryState final_state;
    std::optional<DivergenceError> divergence;

    bool diverged() const { return divergence.has_value(); }
};

// Steps to T, evaluating the named probes every record_stride steps once
// t >= burn_in. Deterministic given seed. A divergence terminates the run
// but keeps everything recorded so far.
TrajectoryResult run_trajectory(const SpectralField& init, const SimParams& params,
                                const std::vector<std::string>& probe_names,
                                std::uint64_t seed, std::uint32_t trajectory = 0);

// W^N_{[s,t]} = int_s^t 8 ||dx W_A(r)||_inf^4 dr by trapezoid over the
// recorded grid; s and t must lie on (or within half a stride of) recorded
// times.
double w_functional(const std::vector<double>& times, const std::vector<double>& dxwa_inf,
                    double s, double t);

// Pathwise fit of the a-priori inequality
//   ||v(t)||^2 <= e^{-alpha t + W_[0,t]} ||v(0)||^2 + C e^{W_[0,t]} (W_[0,t] + t)
// with alpha = |lambda_1|; returns the smallest feasible C per trajectory
// and ensemble tail statistics of ||v||_{C(0,T;L2)} + ||v||_{L2(0,T;H2)}.
struct AprioriReport {
    double alpha = 0.0;
    double fitted_c = 0.0;               // max over trajectories
    std::vector<double> per_traj_c;
    std::vector<double> path_functionals; // sup||v|| + sqrt(int ||dx^2 v||^2)
    double tail_probability(double threshold) const;
};

AprioriReport apriori_check(const std::vector<ObservableSeries>& runs, const ModelSpec& model);

// Noise-off self-convergence of the stepper: errors at h, h/2, h/4, h/8
// against an h/64 reference, least-squares slope of log err vs log h.
struct OrderCheckReport {
    std::vector<double> steps;
    std::vector<double> errors;
    double slope = 0.0;
    bool slope_valid = false;  // false when errors sit at round-off
};

OrderCheckReport deterministic_order_check(const SpectralField& init, SimParams params);

} // namespace thinfilm
