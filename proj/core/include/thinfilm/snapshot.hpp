#pragma once

#include <iosfwd>
#include <string>

#include "thinfilm/field.hpp"

namespace thinfilm {

// Flat little-endian snapshot record:
//   magic "TFSN" (4 bytes), version u32, basis tag u8 (0 periodic,
//   1 neumann), L f64, nu f64, N u32, then the coefficient array f64:
//   N cosine amplitudes followed, for periodic bases, by N sine amplitudes.
inline constexpr std::uint32_t snapshot_version = 1;

void write_snapshot(std::ostream& os, const SpectralField& f, double nu);
void write_snapshot(const std::string& path, const SpectralField& f, double nu);

struct Snapshot {
    SpectralField field;
    double nu = 0.0;
};

Snapshot read_snapshot(std::istream& is);
Snapshot read_snapshot(const std::string& path);

} // namespace thinfilm
