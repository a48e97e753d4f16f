#include "thinfilm/rng.hpp"

#include <cmath>
#include <numbers>

namespace thinfilm {

namespace {

constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
    // (0,1]: never 0, so log() below is safe
    const std::uint64_t v = (static_cast<std::uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(v) + 1.0) * 0x1p-64;
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::uint32_t key0, std::uint32_t key1) {
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(philox_m0, ctr[0], hi0, lo0);
        mulhilo(philox_m1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key0, lo1, hi0 ^ ctr[3] ^ key1, lo0};
        key0 += philox_w0;
        key1 += philox_w1;
    }
    return ctr;
}

double gaussian_draw(std::uint64_t seed, std::uint32_t trajectory,
                     std::uint32_t channel, std::uint64_t index) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(index),
        static_cast<std::uint32_t>(index >> 32),
        channel,
        trajectory,
    };
    const auto r = philox4x32(ctr, static_cast<std::uint32_t>(seed),
                              static_cast<std::uint32_t>(seed >> 32));
    const double u1 = to_unit(r[0], r[1]);
    const double u2 = to_unit(r[2], r[3]);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace thinfilm
