#pragma once

#include <array>
#include <cstdint>

namespace thinfilm {

// Philox4x32-10 counter-based generator. Streams are addressed, not
// stateful: a draw is a pure function of (seed, trajectory, channel, index),
// so ensemble workers can be scheduled in any order and an N-mode run
// shares its low-mode noise path with a 2N-mode run.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::uint32_t key0, std::uint32_t key1);

// Standard normal draw for one stream element (Box-Muller on one block).
double gaussian_draw(std::uint64_t seed, std::uint32_t trajectory,
                     std::uint32_t channel, std::uint64_t index);

// Per-trajectory noise stream cursor. Channels (mode/component pairs) are
// statistically independent; `draw_index` advances once per step event.
struct WienerState {
    std::uint64_t seed = 0;
    std::uint32_t trajectory = 0;
    std::uint64_t draw_index = 0;
    double t = 0.0;

    double gaussian(std::uint32_t channel) const {
        return gaussian_draw(seed, trajectory, channel, draw_index);
    }
    void advance(double h) {
        ++draw_index;
        t += h;
    }
};

} // namespace thinfilm
