#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thinfilm/integrator.hpp"
#include "thinfilm/model.hpp"
#include "thinfilm/series.hpp"

namespace thinfilm {

// The full probe set recorded along trajectories.
namespace probe {
inline const std::string mass = "mass";
inline const std::string u_l2_sq = "u_l2_sq";
inline const std::string dxu_l2_sq = "dxu_l2_sq";
inline const std::string d2v_l2_sq = "d2v_l2_sq";
inline const std::string v_l2_sq = "v_l2_sq";
inline const std::string u_c1 = "u_c1";
inline const std::string log_u_l2 = "log1p_u_l2_sq";
inline const std::string log_u_c1 = "log1p_u_c1_sq";
inline const std::string dxwa_inf = "dxwa_inf";
inline const std::string dxwa_inf4 = "dxwa_inf4";
inline const std::string dxwa_l4_4 = "dxwa_l4_4";
inline const std::string orth_residual = "orth_residual";
std::vector<std::string> all();
} // namespace probe

std::vector<double> evaluate_probes(const TrajectoryState& state, const SimParams& params,
                                    const std::vector<std::string>& names);

// Mode-weight operator (K f)_j = j^{3/8} f_j.
SpectralField k_weight(const SpectralField& f, double exponent = 3.0 / 8.0);

// ---- stationary log-moment scan ------------------------------------------

struct LogMomentEntry {
    std::size_t truncation = 0;
    double mean_log_l2 = 0.0;
    double se_log_l2 = 0.0;
    double mean_log_c1 = 0.0;
    double se_log_c1 = 0.0;
    std::size_t trajectories = 0;
    bool diverged = false;
};

struct LogMomentReport {
    std::vector<LogMomentEntry> entries;
    bool monotone_growth_flag = false;  // means grow systematically with N
    bool agrees_within(double n_sigma) const;
};

struct ScanParams {
    double h = 2e-3;
    double horizon = 60.0;
    double burn_in = 10.0;
    std::size_t record_stride = 25;
    std::size_t ensemble = 200;
    std::uint64_t seed = 1;
};

LogMomentReport stationary_scan(const std::vector<std::size_t>& truncations,
                                const ModelSpec& base_model, const ScanParams& params);

// ---- coupled truncation refinement ---------------------------------------

// For each listed N, steps the N-mode and 2N-mode systems on the identical
// noise path (shared low-mode draws) and records sup_{t<=T} ||u_N - Pi_N
// u_{2N}||_{L2}. Pass iff the sup distances strictly decrease along the
// list.
struct RefinementReport {
    std::vector<std::size_t> truncations;
    std::vector<double> sup_distances;
    bool diverged = false;
    bool pass = false;
};

RefinementReport refinement_check(const std::vector<std::size_t>& truncations,
                                  const ModelSpec& base_model, double h, double horizon,
                                  std::uint64_t seed);

// ---- stochastic-convolution moment experiments ---------------------------

// Monte Carlo estimate of E ||dx W_A^N(t)||_inf^4 on a time grid, per N.
struct Lemma61Report {
    std::vector<double> t_grid;
    std::vector<std::size_t> truncations;
    std::vector<std::vector<double>> estimates;   // [n_idx][t_idx]
    std::vector<std::vector<double>> std_errors;  // [n_idx][t_idx]
    std::vector<double> c_hat;                    // max_t estimate / t^{1/8}
    double c_hat_spread() const;                  // max/min over N
};

Lemma61Report lemma61_experiment(const std::vector<double>& t_grid, std::size_t samples,
                                 const ModelSpec& base_model,
                                 const std::vector<std::size_t>& truncations,
                                 std::uint64_t seed = 1);

// E ||K dx W_A(t)||_4^4 plus the pointwise variance against its mode-sum
// closed form, and the ratio of the variance to t^{1/16}.
struct KWeightMomentReport {
    double t = 0.0;
    double l4_fourth_moment = 0.0;
    double l4_fourth_moment_se = 0.0;
    double pointwise_variance = 0.0;
    double pointwise_variance_se = 0.0;
    double pointwise_variance_exact = 0.0;  // mode-sum oracle
    double variance_over_t116 = 0.0;
};

KWeightMomentReport k_weight_moment(double t, std::size_t samples, const ModelSpec& model,
                                    std::uint64_t seed = 1);

// ---- log-moment inequality check (two-noise lemma) -----------------------

// Checks E (log(x e^{W1} + e^{W2}))^2 <= (log x)^2 + 2(eps + E W1) log x + C
// for W1, W2 iid N(0, K/2) and the explicit constant assembled in
// lemma62_constant().
struct Lemma62Report {
    double k_bound = 0.0;
    double eps = 0.0;
    double constant = 0.0;
    std::vector<double> x_grid;
    std::vector<double> lhs;
    std::vector<double> lhs_se;
    std::vector<double> rhs;
    double min_margin = 0.0;     // min over grid of rhs - lhs
    double min_margin_sigma = 0.0;  // margin / SE at the argmin
    bool moment_precondition_ok = false;
};

double lemma62_constant(double eps, double k_bound);

Lemma62Report lemma62_check(const std::vector<double>& x_grid, double k_bound, double eps,
                            std::size_t samples, std::uint64_t seed = 1);

} // namespace thinfilm
