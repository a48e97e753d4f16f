#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "thinfilm/config.hpp"

namespace thinfilm {

// Exit codes shared by dispatch() and the CLI.
inline constexpr int exit_ok = 0;
inline constexpr int exit_property_failure = 1;
inline constexpr int exit_divergence = 2;
inline constexpr int exit_config_error = 3;

struct DispatchOptions {
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> out_override;
    unsigned threads = 0;  // 0 = hardware default
    bool quiet = false;
};

// command in {simulate, stationary-scan, verify-phi, lemma61, lemma62,
// order-check, refine-check}. Writes a manifest plus the command's series
// CSVs / JSON reports / snapshots into the output directory; returns an
// exit code. Divergence still writes the diagnostic report.
int dispatch(const std::string& command, RunConfig config, const DispatchOptions& options = {});

} // namespace thinfilm
