#include "thinfilm/config.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thinfilm {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::ostringstream ss;
    ss << "invalid configuration:";
    for (const auto& p : parts) ss << "\n  - " << p;
    return ss.str();
}

} // namespace

ConfigError::ConfigError(std::vector<std::string> violations_)
    : std::runtime_error(join(violations_)), violations(std::move(violations_)) {}

NoiseSpectrum NoiseConfig::build(std::size_t modes) const {
    if (type == "white") return NoiseSpectrum::white(modes);
    if (type == "formula") return NoiseSpectrum::from_formula(c, p, modes);
    std::vector<double> a = alphas;
    a.resize(modes, 0.0);
    return NoiseSpectrum::from_array(std::move(a));
}

ModelSpec ModelConfig::build() const {
    ModelSpec m;
    m.basis = BasisSpec(bc == "neumann" ? BoundaryCondition::Neumann
                                        : BoundaryCondition::Periodic,
                        length, truncation);
    m.nu = nu;
    m.noise = noise.build(truncation);
    return m;
}

namespace {

using nlohmann::json;

// Reads cfg[key] into out when present; collects a violation on type
// mismatch. Missing keys keep the compiled-in default.
template <typename T>
void load(const json& cfg, const char* key, T& out, std::vector<std::string>& errs) {
    if (!cfg.contains(key)) return;
    try {
        out = cfg.at(key).get<T>();
    } catch (const json::exception&) {
        errs.push_back(std::string(key) + ": wrong type");
    }
}

void validate(const RunConfig& c, std::vector<std::string>& errs) {
    if (c.model.bc != "periodic" && c.model.bc != "neumann")
        errs.push_back("model.bc: must be \"periodic\" or \"neumann\"");
    if (!(c.model.length > 0.0) || !std::isfinite(c.model.length))
        errs.push_back("model.length: must be a positive finite number");
    if (!std::isfinite(c.model.nu)) errs.push_back("model.nu: must be finite");
    if (c.model.truncation < 1) errs.push_back("model.truncation: must be >= 1");
    const auto& nz = c.model.noise;
    if (nz.type != "white" && nz.type != "array" && nz.type != "formula")
        errs.push_back("model.noise.type: must be \"white\", \"array\" or \"formula\"");
    if (nz.type == "array" && nz.alphas.empty())
        errs.push_back("model.noise.alphas: array noise needs at least one amplitude");
    for (double a : nz.alphas)
        if (!(a >= 0.0) || !std::isfinite(a)) {
            errs.push_back("model.noise.alphas: amplitudes must be finite and >= 0");
            break;
        }
    if (nz.type == "formula" && (!(nz.c >= 0.0) || !std::isfinite(nz.c)))
        errs.push_back("model.noise.c: must be finite and >= 0");
    if (!(c.sim.h > 0.0)) errs.push_back("sim.h: must be positive");
    if (!(c.sim.horizon > 0.0)) errs.push_back("sim.horizon: must be positive");
    if (c.sim.burn_in < 0.0) errs.push_back("sim.burn_in: must be >= 0");
    if (c.sim.horizon < c.sim.burn_in) errs.push_back("sim.horizon: must be >= sim.burn_in");
    if (c.sim.stride < 1) errs.push_back("sim.stride: must be >= 1");
    if (c.sim.ensemble < 1) errs.push_back("sim.ensemble: must be >= 1");
    if (c.scan.truncations.empty()) errs.push_back("scan.truncations: must be nonempty");
    for (double t : c.lemma61.t_grid)
        if (!(t > 0.0 && t <= 1.0)) {
            errs.push_back("lemma61.t_grid: times must lie in (0, 1]");
            break;
        }
    if (c.lemma61.samples < 2) errs.push_back("lemma61.samples: must be >= 2");
    for (double x : c.lemma62.x_grid)
        if (!(x >= 1.0)) {
            errs.push_back("lemma62.x_grid: values must be >= 1");
            break;
        }
    for (double k : c.lemma62.k_bounds)
        if (!(k > 0.0)) {
            errs.push_back("lemma62.k_bounds: values must be positive");
            break;
        }
    if (!(c.lemma62.eps > 0.0)) errs.push_back("lemma62.eps: must be positive");
    if (c.lemma62.samples < 2) errs.push_back("lemma62.samples: must be >= 2");
    if (!(c.order_check.h0 > 0.0)) errs.push_back("order_check.h0: must be positive");
    if (c.refine.truncations.empty()) errs.push_back("refine.truncations: must be nonempty");
    if (!(c.refine.horizon > 0.0)) errs.push_back("refine.horizon: must be positive");
    if (c.phi.target_c < 0.0) errs.push_back("phi.target_c: must be >= 0");
    if (c.phi.grid_modes < 64) errs.push_back("phi.grid_modes: must be >= 64");
    if (c.output_dir.empty()) errs.push_back("output_dir: must be nonempty");
}

} // namespace

RunConfig parse_config(const std::string& text) {
    std::vector<std::string> errs;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError({std::string("not valid JSON: ") + e.what()});
    }
    if (!root.is_object()) throw ConfigError({"top level must be a JSON object"});

    RunConfig c;
    load(root, "experiment", c.experiment, errs);
    load(root, "output_dir", c.output_dir, errs);
    if (root.contains("model")) {
        const json& m = root["model"];
        load(m, "bc", c.model.bc, errs);
        load(m, "length", c.model.length, errs);
        load(m, "nu", c.model.nu, errs);
        load(m, "truncation", c.model.truncation, errs);
        if (m.contains("noise")) {
            const json& n = m["noise"];
            load(n, "type", c.model.noise.type, errs);
            load(n, "alphas", c.model.noise.alphas, errs);
            load(n, "c", c.model.noise.c, errs);
            load(n, "p", c.model.noise.p, errs);
        }
    }
    if (root.contains("sim")) {
        const json& s = root["sim"];
        load(s, "h", c.sim.h, errs);
        load(s, "horizon", c.sim.horizon, errs);
        load(s, "burn_in", c.sim.burn_in, errs);
        load(s, "stride", c.sim.stride, errs);
        load(s, "seed", c.sim.seed, errs);
        load(s, "ensemble", c.sim.ensemble, errs);
    }
    if (root.contains("scan")) load(root["scan"], "truncations", c.scan.truncations, errs);
    if (root.contains("lemma61")) {
        const json& l = root["lemma61"];
        load(l, "t_grid", c.lemma61.t_grid, errs);
        load(l, "samples", c.lemma61.samples, errs);
        load(l, "truncations", c.lemma61.truncations, errs);
    }
    if (root.contains("lemma62")) {
        const json& l = root["lemma62"];
        load(l, "x_grid", c.lemma62.x_grid, errs);
        load(l, "k_bounds", c.lemma62.k_bounds, errs);
        load(l, "eps", c.lemma62.eps, errs);
        load(l, "samples", c.lemma62.samples, errs);
    }
    if (root.contains("order_check")) load(root["order_check"], "h0", c.order_check.h0, errs);
    if (root.contains("refine")) {
        const json& r = root["refine"];
        load(r, "truncations", c.refine.truncations, errs);
        load(r, "horizon", c.refine.horizon, errs);
    }
    if (root.contains("phi")) {
        const json& p = root["phi"];
        load(p, "n_star", c.phi.n_star, errs);
        load(p, "target_c", c.phi.target_c, errs);
        load(p, "grid_modes", c.phi.grid_modes, errs);
        load(p, "form_samples", c.phi.form_samples, errs);
    }

    validate(c, errs);
    if (!errs.empty()) throw ConfigError(std::move(errs));
    return c;
}

std::string emit_config(const RunConfig& c) {
    json root;
    root["experiment"] = c.experiment;
    root["output_dir"] = c.output_dir;
    root["model"] = {{"bc", c.model.bc},
                     {"length", c.model.length},
                     {"nu", c.model.nu},
                     {"truncation", c.model.truncation},
                     {"noise",
                      {{"type", c.model.noise.type},
                       {"alphas", c.model.noise.alphas},
                       {"c", c.model.noise.c},
                       {"p", c.model.noise.p}}}};
    root["sim"] = {{"h", c.sim.h},         {"horizon", c.sim.horizon},
                   {"burn_in", c.sim.burn_in}, {"stride", c.sim.stride},
                   {"seed", c.sim.seed},   {"ensemble", c.sim.ensemble}};
    root["scan"] = {{"truncations", c.scan.truncations}};
    root["lemma61"] = {{"t_grid", c.lemma61.t_grid},
                       {"samples", c.lemma61.samples},
                       {"truncations", c.lemma61.truncations}};
    root["lemma62"] = {{"x_grid", c.lemma62.x_grid},
                       {"k_bounds", c.lemma62.k_bounds},
                       {"eps", c.lemma62.eps},
                       {"samples", c.lemma62.samples}};
    root["order_check"] = {{"h0", c.order_check.h0}};
    root["refine"] = {{"truncations", c.refine.truncations}, {"horizon", c.refine.horizon}};
    root["phi"] = {{"n_star", c.phi.n_star},
                   {"target_c", c.phi.target_c},
                   {"grid_modes", c.phi.grid_modes},
                   {"form_samples", c.phi.form_samples}};
    return root.dump(2) + "\n";
}

} // namespace thinfilm
