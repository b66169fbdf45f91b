#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conred {

// Flat index pair (a, j): summand a = 1..r, weight index j = 0..k_a.
struct IndexPair {
    int a = 0;
    int j = 0;
    friend bool operator==(const IndexPair&, const IndexPair&) = default;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

enum class errc {
    empty_descriptor,
    negative_symmetric_degree,
    bad_length,
    length_mismatch,
    zero_vector,
    not_generic,
    not_uniform,
    moment_hits_zero,
    diagonal_ray,
    critical_ray,
    empty_side,
    on_boundary,
    outside_image,
    probe_outside_wedge,
    out_of_range,
    too_small,
    max_resamples_exceeded,
    malformed_input,
};

const char* errc_name(errc code);

// Domain error carrying a machine-readable code plus, where the failure is
// witnessed by specific coordinates, the witnessing index pairs.
class Error : public std::runtime_error {
public:
    Error(errc code, std::string message, std::vector<IndexPair> witnesses = {})
        : std::runtime_error(std::move(message)), code_(code), witnesses_(std::move(witnesses)) {}

    errc code() const { return code_; }
    const std::vector<IndexPair>& witnesses() const { return witnesses_; }

private:
    errc code_;
    std::vector<IndexPair> witnesses_;
};

[[noreturn]] inline void raise(errc code, std::string message, std::vector<IndexPair> witnesses = {}) {
    throw Error(code, std::move(message), std::move(witnesses));
}

} // namespace conred
