#pragma once

#include <stdexcept>
#include <string>

namespace thinfilm {

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ResolutionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Physical-space input incompatible with the basis symmetry (e.g. an
// asymmetric buffer projected onto a Neumann cosine basis).
struct BasisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnstableModeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Trajectory blow-up. Carries the time and field norm at abort.
struct DivergenceError : std::runtime_error {
    DivergenceError(double t_, double norm_, const std::string& what_)
        : std::runtime_error(what_), t(t_), norm(norm_) {}
    double t;
    double norm;
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace thinfilm
