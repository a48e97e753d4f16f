#include "thinfilm/model.hpp"

#include <cstring>
#include <string>

#include "thinfilm/manifest.hpp"

namespace thinfilm {

std::uint64_t ModelSpec::fingerprint() const {
    std::string buf;
    buf += basis.bc == BoundaryCondition::Periodic ? 'P' : 'N';
    auto put = [&buf](double x) {
        char raw[sizeof(double)];
        std::memcpy(raw, &x, sizeof(double));
        buf.append(raw, sizeof(double));
    };
    put(basis.length);
    put(nu);
    buf += std::to_string(basis.truncation);
    for (double a : noise.alphas) put(a);
    return fnv1a64(buf);
}

} // namespace thinfilm
