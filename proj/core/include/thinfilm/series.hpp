#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinfilm/errors.hpp"

namespace thinfilm {

// Time-indexed scalar diagnostics for one trajectory. Columns share the
// strictly increasing time grid; a divergence marker may terminate the
// series early.
struct ObservableSeries {
    std::vector<std::string> names;
    std::vector<double> times;
    std::vector<std::vector<double>> values;  // values[row][col]
    std::uint64_t seed = 0;
    std::uint32_t trajectory = 0;
    std::uint64_t model_fingerprint = 0;
    std::optional<double> divergence_time;

    std::size_t rows() const { return times.size(); }
    std::size_t column(const std::string& name) const;
    std::vector<double> column_values(const std::string& name) const;
    void append(double t, const std::vector<double>& row);
};

// Mergeable per-probe moment accumulators (count/mean/M2/min/max).
// merge() is exact pooling, associative and commutative.
struct EnsembleStats {
    struct Probe {
        std::uint64_t count = 0;
        double mean = 0.0;
        double m2 = 0.0;
        double min = 0.0;
        double max = 0.0;

        void add(double x);
        double variance() const;  // unbiased sample variance
        double stderr_mean() const;
    };

    std::vector<std::string> names;
    std::vector<Probe> probes;
    std::uint64_t model_fingerprint = 0;

    static EnsembleStats for_probes(const std::vector<std::string>& names,
                                    std::uint64_t fingerprint);
    void add_row(const std::vector<double>& row);
    bool empty() const;
};

EnsembleStats merge(const EnsembleStats& a, const EnsembleStats& b);

} // namespace thinfilm
