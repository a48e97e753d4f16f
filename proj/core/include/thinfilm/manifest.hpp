#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace thinfilm {

std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64(const std::string& data);
std::string digest_hex(std::uint64_t digest);
std::string file_digest_hex(const std::string& path);

// Index of every file a run emitted, with content digests. The manifest
// itself carries the wall-clock metadata; the indexed outputs are
// timestamp-free so identical config + seed reproduces them byte for byte.
struct RunManifest {
    std::string config_snapshot;  // canonical emitted config
    std::string artifact_version;
    std::string wall_clock;       // ISO-8601, informational only
    struct Entry {
        std::string name;
        std::string digest;
    };
    std::vector<Entry> files;

    void add_file(const std::string& dir, const std::string& name);
    void write(const std::string& path) const;
    // True iff every listed file exists and matches its digest.
    bool verify(const std::string& dir) const;
};

} // namespace thinfilm
