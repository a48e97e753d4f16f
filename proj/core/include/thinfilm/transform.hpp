#pragma once

#include <cstddef>
#include <vector>

#include "thinfilm/field.hpp"

namespace thinfilm {

// Dense real-trigonometric transform with cached cos/sin tables for a fixed
// (period, N, M). Plans are cheap to build (O(N*M) trig calls) and are
// cached per thread by the free functions below; workers therefore never
// share scratch state.
class TransformPlan {
  public:
    TransformPlan(double period, std::size_t modes, std::size_t samples);

    double period() const { return period_; }
    std::size_t modes() const { return modes_; }
    std::size_t samples() const { return samples_; }

    void synthesize(const SpectralField& f, std::vector<double>& out) const;
    // Projects onto modes 1..N, dropping the mean and everything above N.
    void analyze(const std::vector<double>& samples, SpectralField& out) const;

  private:
    double period_;
    std::size_t modes_;
    std::size_t samples_;
    std::vector<double> cos_;  // [j-1][i], row-major N x M
    std::vector<double> sin_;
};

// Thread-local cached plan lookup.
const TransformPlan& plan_for(double period, std::size_t modes, std::size_t samples);

// Evaluate f at M uniform points of its (extended) periodic grid.
// Requires M >= N+1; exact for band-limited fields.
GridBuffer to_physical(const SpectralField& f, std::size_t samples);

// Project a grid buffer onto the basis (this is Pi_N plus mean removal).
// Neumann targets reject buffers whose odd part exceeds `symmetry_tol`
// relative to the buffer scale.
SpectralField from_physical(const GridBuffer& g, const BasisSpec& basis,
                            double symmetry_tol = 1e-8);

} // namespace thinfilm
