#include "thinfilm/series.hpp"

#include <algorithm>
#include <cmath>

namespace thinfilm {

std::size_t ObservableSeries::column(const std::string& name) const {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw IndexError("ObservableSeries: no column " + name);
    return static_cast<std::size_t>(it - names.begin());
}

std::vector<double> ObservableSeries::column_values(const std::string& name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& row : values) out.push_back(row[c]);
    return out;
}

void ObservableSeries::append(double t, const std::vector<double>& row) {
    if (!times.empty() && t <= times.back())
        throw IndexError("ObservableSeries: time grid must be strictly increasing");
    if (row.size() != names.size())
        throw IndexError("ObservableSeries: row width does not match the column set");
    times.push_back(t);
    values.push_back(row);
}

void EnsembleStats::Probe::add(double x) {
    if (count == 0) {
        min = max = x;
    } else {
        min = std::min(min, x);
        max = std::max(max, x);
    }
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
}

double EnsembleStats::Probe::variance() const {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
}

double EnsembleStats::Probe::stderr_mean() const {
    return count > 1 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
}

EnsembleStats EnsembleStats::for_probes(const std::vector<std::string>& names,
                                        std::uint64_t fingerprint) {
    EnsembleStats s;
    s.names = names;
    s.probes.resize(names.size());
    s.model_fingerprint = fingerprint;
    return s;
}

void EnsembleStats::add_row(const std::vector<double>& row) {
    for (std::size_t i = 0; i < probes.size(); ++i) probes[i].add(row[i]);
}

bool EnsembleStats::empty() const {
    for (const auto& p : probes)
        if (p.count > 0) return false;
    return true;
}

EnsembleStats merge(const EnsembleStats& a, const EnsembleStats& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.names != b.names || a.model_fingerprint != b.model_fingerprint)
        throw IndexError("EnsembleStats::merge: probe set or model fingerprint mismatch");
    EnsembleStats out = a;
    for (std::size_t i = 0; i < out.probes.size(); ++i) {
        const auto& p = a.probes[i];
        const auto& q = b.probes[i];
        auto& r = out.probes[i];
        if (q.count == 0) continue;
        if (p.count == 0) {
            r = q;
            continue;
        }
        const double na = static_cast<double>(p.count);
        const double nb = static_cast<double>(q.count);
        const double delta = q.mean - p.mean;
        r.count = p.count + q.count;
        r.mean = p.mean + delta * nb / (na + nb);
        r.m2 = p.m2 + q.m2 + delta * delta * na * nb / (na + nb);
        r.min = std::min(p.min, q.min);
        r.max = std::max(p.max, q.max);
    }
    return out;
}

} // namespace thinfilm
