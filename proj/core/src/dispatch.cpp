#include "thinfilm/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "thinfilm/analysis.hpp"
#include "thinfilm/integrator.hpp"
#include "thinfilm/manifest.hpp"
#include "thinfilm/norms.hpp"
#include "thinfilm/snapshot.hpp"
#include "thinfilm/stabilizer.hpp"

namespace thinfilm {

namespace {

using nlohmann::json;

std::string now_iso8601() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_series_csv(const std::string& path, const ObservableSeries& s) {
    std::ofstream os(path);
    if (!os) throw SolverError("cannot open " + path);
    os << "t";
    for (const auto& n : s.names) os << "," << n;
    os << "\n";
    for (std::size_t r = 0; r < s.rows(); ++r) {
        os << fmt(s.times[r]);
        for (double v : s.values[r]) os << "," << fmt(v);
        os << "\n";
    }
}

void write_json(const std::string& path, const json& j) {
    std::ofstream os(path);
    if (!os) throw SolverError("cannot open " + path);
    os << j.dump(2) << "\n";
}

struct Context {
    RunConfig config;
    DispatchOptions options;
    std::string out;
    RunManifest manifest;

    void emit(const std::string& name) { manifest.add_file(out, name); }
    void note(const std::string& line) const {
        if (!options.quiet) std::cout << line << "\n";
    }
    int finish(int code) {
        manifest.wall_clock = now_iso8601();
        manifest.write(out + "/manifest.json");
        return code;
    }
};

SimParams sim_params(const RunConfig& c) {
    SimParams p;
    p.h = c.sim.h;
    p.horizon = c.sim.horizon;
    p.burn_in = c.sim.burn_in;
    p.record_stride = c.sim.stride;
    p.model = c.model.build();
    return p;
}

int cmd_simulate(Context& ctx) {
    SimParams params = sim_params(ctx.config);
    if (params.exceeds_step_cap())
        ctx.note("warning: h exceeds the recommended cap 0.5/|lambda_N|");
    const auto probes = probe::all();
    const SpectralField init(params.model.basis);

    json summary;
    summary["trajectories"] = json::array();
    bool any_diverged = false;
    for (std::size_t k = 0; k < ctx.config.sim.ensemble; ++k) {
        const TrajectoryResult r = run_trajectory(init, params, probes, ctx.config.sim.seed,
                                                  static_cast<std::uint32_t>(k));
        if (r.series.rows() > 0) {
            const std::string series_name = "series_" + std::to_string(k) + ".csv";
            write_series_csv(ctx.out + "/" + series_name, r.series);
            ctx.emit(series_name);
        }
        const std::string snap_name = "snapshot_" + std::to_string(k) + ".bin";
        write_snapshot(ctx.out + "/" + snap_name, r.final_state.u, params.model.nu);
        ctx.emit(snap_name);

        json t;
        t["trajectory"] = k;
        t["final_time"] = r.final_state.t;
        t["diverged"] = r.diverged();
        if (r.diverged()) {
            t["divergence_time"] = r.divergence->t;
            t["divergence_norm"] = r.divergence->norm;
            any_diverged = true;
        }
        summary["trajectories"].push_back(t);
    }
    summary["diverged"] = any_diverged;
    write_json(ctx.out + "/summary.json", summary);
    ctx.emit("summary.json");
    ctx.note(any_diverged ? "simulate: DIVERGED" : "simulate: OK");
    return ctx.finish(any_diverged ? exit_divergence : exit_ok);
}

int cmd_stationary_scan(Context& ctx) {
    ScanParams sp;
    sp.h = ctx.config.sim.h;
    sp.horizon = ctx.config.sim.horizon;
    sp.burn_in = ctx.config.sim.burn_in;
    sp.record_stride = ctx.config.sim.stride;
    sp.ensemble = ctx.config.sim.ensemble;
    sp.seed = ctx.config.sim.seed;
    const LogMomentReport report =
        stationary_scan(ctx.config.scan.truncations, ctx.config.model.build(), sp);

    json j;
    j["entries"] = json::array();
    bool any_diverged = false;
    for (const auto& e : report.entries) {
        any_diverged = any_diverged || e.diverged;
        j["entries"].push_back({{"truncation", e.truncation},
                                {"mean_log_l2", e.mean_log_l2},
                                {"se_log_l2", e.se_log_l2},
                                {"mean_log_c1", e.mean_log_c1},
                                {"se_log_c1", e.se_log_c1},
                                {"trajectories", e.trajectories},
                                {"diverged", e.diverged}});
    }
    j["monotone_growth"] = report.monotone_growth_flag;
    j["agrees_within_3_sigma"] = report.agrees_within(3.0);
    write_json(ctx.out + "/scan.json", j);
    ctx.emit("scan.json");
    ctx.note(std::string("stationary-scan: ") +
             (any_diverged ? "DIVERGED"
                           : (report.monotone_growth_flag ? "GROWTH" : "STABLE")));
    return ctx.finish(any_diverged ? exit_divergence : exit_ok);
}

int cmd_verify_phi(Context& ctx) {
    const ModelSpec model = ctx.config.model.build();
    if (model.nu >= 0.0) {
        std::cerr << "verify-phi: needs nu < 0\n";
        return exit_config_error;
    }
    const double target = ctx.config.phi.target_c > 0.0 ? ctx.config.phi.target_c
                                                        : std::abs(model.nu);
    std::size_t n_star = ctx.config.phi.n_star;
    if (n_star == 0) {
        SelectOptions opts;
        opts.grid_modes = ctx.config.phi.grid_modes;
        n_star = select_n_star(model.basis.length, model.nu, target, opts);
    }
    const StabilizerProfile profile =
        build_phi(n_star, model.nu, model.basis.length, model.basis.truncation);
    const HphiReport eig = hphi_min_eigenvalue_checked(profile, ctx.config.phi.grid_modes);
    const FormCheckReport form = tilde_a_form_check(
        profile, ctx.config.phi.form_samples, model.basis.truncation, ctx.config.sim.seed);

    const bool pass = profile.gamma.holds() && eig.min_eigenvalue >= target && form.pass;
    json j;
    j["n_star"] = n_star;
    j["target_c"] = target;
    j["gamma"] = {{"computed_sum", profile.gamma.computed_sum},
                  {"tail_bound", profile.gamma.tail_bound},
                  {"total", profile.gamma.total()},
                  {"paper_bound_form", profile.gamma.paper_bound},
                  {"holds", profile.gamma.holds()}};
    j["hphi_min_eigenvalue"] = eig.min_eigenvalue;
    j["hphi_min_eigenvalue_fine"] = eig.min_eigenvalue_fine;
    j["hphi_richardson_drift"] = eig.richardson_drift;
    j["form_min_ratio"] = form.min_ratio;
    j["form_pass"] = form.pass;
    j["truncation_residual"] = profile.truncation_residual;
    j["pass"] = pass;
    write_json(ctx.out + "/phi.json", j);
    ctx.emit("phi.json");
    ctx.note(std::string("verify-phi: ") + (pass ? "PASS" : "FAIL"));
    return ctx.finish(pass ? exit_ok : exit_property_failure);
}

int cmd_lemma61(Context& ctx) {
    const Lemma61Report report =
        lemma61_experiment(ctx.config.lemma61.t_grid, ctx.config.lemma61.samples,
                           ctx.config.model.build(), ctx.config.lemma61.truncations,
                           ctx.config.sim.seed);
    bool finite = true;
    for (const auto& row : report.estimates)
        for (double v : row) finite = finite && std::isfinite(v);
    const double spread = report.c_hat_spread();
    const bool pass = finite && spread <= 4.0;

    json j;
    j["t_grid"] = report.t_grid;
    j["truncations"] = report.truncations;
    j["estimates"] = report.estimates;
    j["std_errors"] = report.std_errors;
    j["c_hat"] = report.c_hat;
    j["c_hat_spread"] = spread;
    j["pass"] = pass;
    write_json(ctx.out + "/lemma61.json", j);
    ctx.emit("lemma61.json");
    ctx.note(std::string("lemma61: ") + (pass ? "PASS" : "FAIL"));
    return ctx.finish(pass ? exit_ok : exit_property_failure);
}

int cmd_lemma62(Context& ctx) {
    json j;
    j["checks"] = json::array();
    bool pass = true;
    for (double k : ctx.config.lemma62.k_bounds) {
        const Lemma62Report r =
            lemma62_check(ctx.config.lemma62.x_grid, k, ctx.config.lemma62.eps,
                          ctx.config.lemma62.samples, ctx.config.sim.seed);
        pass = pass && r.min_margin > 0.0 && r.moment_precondition_ok;
        j["checks"].push_back({{"k_bound", r.k_bound},
                               {"eps", r.eps},
                               {"constant", r.constant},
                               {"x_grid", r.x_grid},
                               {"lhs", r.lhs},
                               {"lhs_se", r.lhs_se},
                               {"rhs", r.rhs},
                               {"min_margin", r.min_margin},
                               {"min_margin_sigma", r.min_margin_sigma}});
    }
    j["pass"] = pass;
    write_json(ctx.out + "/lemma62.json", j);
    ctx.emit("lemma62.json");
    ctx.note(std::string("lemma62: ") + (pass ? "PASS" : "FAIL"));
    return ctx.finish(pass ? exit_ok : exit_property_failure);
}

int cmd_order_check(Context& ctx) {
    SimParams params = sim_params(ctx.config);
    params.h = ctx.config.order_check.h0;
    SpectralField init(params.model.basis);
    for (std::size_t m = 1; m <= init.modes(); ++m)
        init.a[m - 1] = 0.5 / (static_cast<double>(m) * static_cast<double>(m));
    const OrderCheckReport report = deterministic_order_check(init, params);
    const bool pass = !report.slope_valid || report.slope >= 0.8;

    json j;
    j["steps"] = report.steps;
    j["errors"] = report.errors;
    j["slope"] = report.slope;
    j["slope_valid"] = report.slope_valid;
    j["pass"] = pass;
    write_json(ctx.out + "/order.json", j);
    ctx.emit("order.json");
    ctx.note(std::string("order-check: ") + (pass ? "PASS" : "FAIL"));
    return ctx.finish(pass ? exit_ok : exit_property_failure);
}

int cmd_refine_check(Context& ctx) {
    std::vector<std::size_t> ns = ctx.config.refine.truncations;
    std::sort(ns.begin(), ns.end());
    const RefinementReport report =
        refinement_check(ns, ctx.config.model.build(), ctx.config.sim.h,
                         ctx.config.refine.horizon, ctx.config.sim.seed);
    if (report.diverged) {
        json j;
        j["diverged"] = true;
        write_json(ctx.out + "/refine.json", j);
        ctx.emit("refine.json");
        ctx.note("refine-check: DIVERGED");
        return ctx.finish(exit_divergence);
    }
    const bool pass = report.pass;
    json j;
    j["truncations"] = ns;
    j["sup_distance_to_refined"] = report.sup_distances;
    j["pass"] = pass;
    write_json(ctx.out + "/refine.json", j);
    ctx.emit("refine.json");
    ctx.note(std::string("refine-check: ") + (pass ? "PASS" : "FAIL"));
    return ctx.finish(pass ? exit_ok : exit_property_failure);
}

} // namespace

int dispatch(const std::string& command, RunConfig config, const DispatchOptions& options) {
    if (options.seed_override) config.sim.seed = *options.seed_override;
    // the snapshot describes the experiment, not where this run landed
    const std::string config_snapshot = emit_config(config);
    if (options.out_override) config.output_dir = *options.out_override;

    Context ctx{std::move(config), options, {}, {}};
    ctx.out = ctx.config.output_dir;
    std::error_code ec;
    std::filesystem::create_directories(ctx.out, ec);
    if (ec) {
        std::cerr << "cannot create output directory " << ctx.out << ": " << ec.message() << "\n";
        return exit_config_error;
    }
    ctx.manifest.config_snapshot = config_snapshot;
    ctx.manifest.artifact_version = "1";
    {
        std::ofstream os(ctx.out + "/config.json");
        os << ctx.manifest.config_snapshot;
    }
    ctx.emit("config.json");

    try {
        if (command == "simulate") return cmd_simulate(ctx);
        if (command == "stationary-scan") return cmd_stationary_scan(ctx);
        if (command == "verify-phi") return cmd_verify_phi(ctx);
        if (command == "lemma61") return cmd_lemma61(ctx);
        if (command == "lemma62") return cmd_lemma62(ctx);
        if (command == "order-check") return cmd_order_check(ctx);
        if (command == "refine-check") return cmd_refine_check(ctx);
    } catch (const DivergenceError& e) {
        std::cerr << e.what() << "\n";
        return exit_divergence;
    } catch (const std::exception& e) {
        std::cerr << command << ": " << e.what() << "\n";
        return exit_property_failure;
    }
    std::cerr << "unknown command: " << command << "\n";
    return exit_config_error;
}

} // namespace thinfilm
