#include "thinfilm/transform.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "thinfilm/errors.hpp"

namespace thinfilm {

TransformPlan::TransformPlan(double period, std::size_t modes, std::size_t samples)
    : period_(period), modes_(modes), samples_(samples),
      cos_(modes * samples), sin_(modes * samples) {
    if (samples < modes + 1)
        throw ResolutionError("TransformPlan: need at least N+1 samples");
    const double dx = period / static_cast<double>(samples);
    for (std::size_t j = 1; j <= modes; ++j) {
        const double q = 2.0 * std::numbers::pi * static_cast<double>(j) / period;
        double* crow = cos_.data() + (j - 1) * samples;
        double* srow = sin_.data() + (j - 1) * samples;
        for (std::size_t i = 0; i < samples; ++i) {
            const double x = dx * static_cast<double>(i);
            crow[i] = std::cos(q * x);
            srow[i] = std::sin(q * x);
        }
    }
}

void TransformPlan::synthesize(const SpectralField& f, std::vector<double>& out) const {
    out.assign(samples_, 0.0);
    for (std::size_t j = 0; j < modes_; ++j) {
        const double a = f.a[j];
        const double b = f.b[j];
        if (a == 0.0 && b == 0.0) continue;
        const double* crow = cos_.data() + j * samples_;
        const double* srow = sin_.data() + j * samples_;
        for (std::size_t i = 0; i < samples_; ++i) out[i] += a * crow[i] + b * srow[i];
    }
}

void TransformPlan::analyze(const std::vector<double>& samples, SpectralField& out) const {
    const double scale = 2.0 / static_cast<double>(samples_);
    for (std::size_t j = 0; j < modes_; ++j) {
        const double* crow = cos_.data() + j * samples_;
        const double* srow = sin_.data() + j * samples_;
        double sa = 0.0;
        double sb = 0.0;
        for (std::size_t i = 0; i < samples_; ++i) {
            sa += samples[i] * crow[i];
            sb += samples[i] * srow[i];
        }
        out.a[j] = scale * sa;
        out.b[j] = scale * sb;
    }
}

const TransformPlan& plan_for(double period, std::size_t modes, std::size_t samples) {
    thread_local std::map<std::tuple<double, std::size_t, std::size_t>, TransformPlan> cache;
    const auto key = std::make_tuple(period, modes, samples);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, TransformPlan(period, modes, samples)).first;
    return it->second;
}

GridBuffer to_physical(const SpectralField& f, std::size_t samples) {
    if (samples < f.modes() + 1)
        throw ResolutionError("to_physical: need at least N+1 samples");
    const auto& plan = plan_for(f.basis.period(), f.modes(), samples);
    GridBuffer g;
    g.period = f.basis.period();
    g.length = f.basis.length;
    plan.synthesize(f, g.values);
    return g;
}

SpectralField from_physical(const GridBuffer& g, const BasisSpec& basis, double symmetry_tol) {
    if (std::abs(g.period - basis.period()) > 1e-12 * basis.period())
        throw BasisError("from_physical: grid period incompatible with basis");
    if (g.size() < basis.truncation + 1)
        throw ResolutionError("from_physical: grid too coarse for truncation");
    const auto& plan = plan_for(basis.period(), basis.truncation, g.size());
    SpectralField f(basis);
    plan.analyze(g.values, f);
    if (basis.bc == BoundaryCondition::Neumann) {
        double scale = 0.0;
        for (double v : g.values) scale = std::max(scale, std::abs(v));
        double worst = 0.0;
        for (double v : f.b) worst = std::max(worst, std::abs(v));
        if (worst > symmetry_tol * std::max(scale, 1e-300))
            throw BasisError("from_physical: buffer violates Neumann even symmetry");
        for (double& v : f.b) v = 0.0;
    }
    return f;
}

} // namespace thinfilm
