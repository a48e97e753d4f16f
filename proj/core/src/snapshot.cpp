#include "thinfilm/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "thinfilm/errors.hpp"

namespace thinfilm {

namespace {

static_assert(std::endian::native == std::endian::little,
              "snapshot I/O assumes a little-endian host");

constexpr char magic[4] = {'T', 'F', 'S', 'N'};

template <typename T>
void put(std::ostream& os, T value) {
    char raw[sizeof(T)];
    std::memcpy(raw, &value, sizeof(T));
    os.write(raw, sizeof(T));
}

template <typename T>
T get(std::istream& is) {
    char raw[sizeof(T)];
    is.read(raw, sizeof(T));
    if (!is) throw SolverError("read_snapshot: truncated record");
    T value;
    std::memcpy(&value, raw, sizeof(T));
    return value;
}

} // namespace

void write_snapshot(std::ostream& os, const SpectralField& f, double nu) {
    os.write(magic, 4);
    put<std::uint32_t>(os, snapshot_version);
    put<std::uint8_t>(os, f.basis.bc == BoundaryCondition::Periodic ? 0 : 1);
    put<double>(os, f.basis.length);
    put<double>(os, nu);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(f.basis.truncation));
    for (double a : f.a) put<double>(os, a);
    if (f.basis.bc == BoundaryCondition::Periodic)
        for (double b : f.b) put<double>(os, b);
    if (!os) throw SolverError("write_snapshot: stream write failed");
}

void write_snapshot(const std::string& path, const SpectralField& f, double nu) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw SolverError("write_snapshot: cannot open " + path);
    write_snapshot(os, f, nu);
}

Snapshot read_snapshot(std::istream& is) {
    char head[4];
    is.read(head, 4);
    if (!is || std::memcmp(head, magic, 4) != 0)
        throw SolverError("read_snapshot: bad magic");
    const auto version = get<std::uint32_t>(is);
    if (version != snapshot_version)
        throw SolverError("read_snapshot: unsupported version " + std::to_string(version));
    const auto tag = get<std::uint8_t>(is);
    if (tag > 1) throw SolverError("read_snapshot: bad basis tag");
    const double length = get<double>(is);
    const double nu = get<double>(is);
    const auto n = get<std::uint32_t>(is);
    if (n < 1 || length <= 0.0) throw SolverError("read_snapshot: bad geometry");

    const BasisSpec basis(tag == 0 ? BoundaryCondition::Periodic : BoundaryCondition::Neumann,
                          length, n);
    Snapshot snap{SpectralField(basis), nu};
    for (std::uint32_t j = 0; j < n; ++j) snap.field.a[j] = get<double>(is);
    if (tag == 0)
        for (std::uint32_t j = 0; j < n; ++j) snap.field.b[j] = get<double>(is);
    return snap;
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw SolverError("read_snapshot: cannot open " + path);
    return read_snapshot(is);
}

} // namespace thinfilm
