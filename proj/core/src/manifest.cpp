#include "thinfilm/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "thinfilm/errors.hpp"

namespace thinfilm {

std::uint64_t fnv1a64(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t hash = 14695981039346656037ull;
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 1099511628211ull;
    }
    return hash;
}

std::uint64_t fnv1a64(const std::string& data) { return fnv1a64(data.data(), data.size()); }

std::string digest_hex(std::uint64_t digest) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
    return buf;
}

std::string file_digest_hex(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw SolverError("file_digest_hex: cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return digest_hex(fnv1a64(ss.str()));
}

void RunManifest::add_file(const std::string& dir, const std::string& name) {
    files.push_back({name, file_digest_hex(dir + "/" + name)});
}

void RunManifest::write(const std::string& path) const {
    nlohmann::json j;
    j["config"] = config_snapshot;
    j["artifact_version"] = artifact_version;
    j["wall_clock"] = wall_clock;
    j["files"] = nlohmann::json::array();
    for (const auto& e : files) j["files"].push_back({{"name", e.name}, {"digest", e.digest}});
    std::ofstream os(path);
    if (!os) throw SolverError("RunManifest::write: cannot open " + path);
    os << j.dump(2) << "\n";
}

bool RunManifest::verify(const std::string& dir) const {
    for (const auto& e : files) {
        try {
            if (file_digest_hex(dir + "/" + e.name) != e.digest) return false;
        } catch (const SolverError&) {
            return false;
        }
    }
    return true;
}

} // namespace thinfilm
