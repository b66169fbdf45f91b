#include "conred/rng.hpp"

#include <cmath>
#include <numbers>

namespace conred {

double SplitMix64::normal() {
    // u1 in (0, 1] so the log is finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t sample) {
    const auto mix = [](std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t s = mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
    s = mix(s ^ (sample + 0xd1b54a32d192ed03ULL));
    return s;
}

} // namespace conred
