#pragma once

#include <complex>
#include <cstdint>

namespace conred {

// Portable seedable generator (splitmix64). Streams are derived purely from
// (seed, stream, sample), so reports are reproducible regardless of
// evaluation order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller; consumes two uniforms per call.
    double normal();

    std::complex<double> normal_complex() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

private:
    std::uint64_t state_;
};

// Stream-splitting rule: one independent generator per (seed, stream, sample).
std::uint64_t substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t sample);

} // namespace conred
