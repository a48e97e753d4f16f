#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thinfilm/model.hpp"

namespace thinfilm {

// All constraint violations found while parsing, not just the first.
struct ConfigError : std::runtime_error {
    explicit ConfigError(std::vector<std::string> violations_);
    std::vector<std::string> violations;
};

struct NoiseConfig {
    std::string type = "white";  // white | array | formula
    std::vector<double> alphas;  // array
    double c = 1.0;              // formula: alpha_j = c * j^{-p}
    double p = 0.0;

    NoiseSpectrum build(std::size_t modes) const;
};

struct ModelConfig {
    std::string bc = "periodic";  // periodic | neumann
    double length = 6.283185307179586;
    double nu = 1.0;
    std::size_t truncation = 32;
    NoiseConfig noise;

    ModelSpec build() const;
};

struct SimConfig {
    double h = 1e-3;
    double horizon = 1.0;
    double burn_in = 0.0;
    std::size_t stride = 10;
    std::uint64_t seed = 1;
    std::size_t ensemble = 1;
};

struct ScanConfig {
    std::vector<std::size_t> truncations = {16, 32, 64};
};

struct Lemma61Config {
    std::vector<double> t_grid = {1e-4, 1e-3, 1e-2, 1e-1};
    std::size_t samples = 20000;
    std::vector<std::size_t> truncations = {32, 64, 128};
};

struct Lemma62Config {
    std::vector<double> x_grid = {1.0, 10.0, 100.0, 10000.0};
    std::vector<double> k_bounds = {1.0, 4.0};
    double eps = 0.1;
    std::size_t samples = 1000000;
};

struct OrderCheckConfig {
    double h0 = 0.0625;
};

struct RefineConfig {
    std::vector<std::size_t> truncations = {8, 16, 32};
    double horizon = 5.0;
};

struct PhiConfig {
    std::size_t n_star = 0;  // 0 = choose via select_n_star
    double target_c = 0.0;   // 0 = |nu|
    std::size_t grid_modes = 512;
    std::size_t form_samples = 10000;
};

struct RunConfig {
    ModelConfig model;
    SimConfig sim;
    std::string experiment = "simulate";
    std::string output_dir = "out";
    ScanConfig scan;
    Lemma61Config lemma61;
    Lemma62Config lemma62;
    OrderCheckConfig order_check;
    RefineConfig refine;
    PhiConfig phi;
};

// Throws ConfigError listing every violation. Round trip holds:
// emit_config(parse_config(emit_config(c))) == emit_config(c).
RunConfig parse_config(const std::string& text);
std::string emit_config(const RunConfig& config);

} // namespace thinfilm
