#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "conred/geometry.hpp"
#include "conred/rep.hpp"

namespace conred {

// The two sides of the sign partition with their absolute weights, entries in
// lexicographic (a, j) order.
struct WeightVectorPair {
    std::vector<std::int64_t> a; // |n| over the positive side P
    std::vector<std::int64_t> b; // |n| over the negative side N
    std::vector<IndexPair> a_sources;
    std::vector<IndexPair> b_sources;
};

// A weighted projective space P(weights); raw weights are kept for audit,
// weights are the gcd-normalized effective quotient.
struct PlainWPS {
    std::vector<std::int64_t> weights;
    std::vector<std::int64_t> raw_weights;
    std::int64_t complex_dim = 0;
    friend bool operator==(const PlainWPS&, const PlainWPS&) = default;
};

// The Segre-type quotient P(a, -b) inside P(c), c_ij = a_i + b_j, cut out by
// the 2x2 minors; d_ij = a_i b_j is the metric weighting.
struct SegreQuotient {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
    std::vector<std::vector<std::int64_t>> c;
    std::vector<std::vector<std::int64_t>> d;
    std::int64_t generators = 0;
    std::int64_t complex_dim = 0;
};

using VarietyDescriptor = std::variant<PlainWPS, SegreQuotient>;

struct IsotopyEndpoints {
    PlainWPS ambient; // P(1, 2, ..., k)
    PlainWPS divisor; // P(2, ..., k); valid for nu1/nu2 sufficiently large
    bool divisor_asymptotic = true;
};

using BettiTable = std::vector<std::int64_t>;

// The integer weight n_nu(a, j) = -nu2 (k_a - j + l_a) + nu1 (l_a + j).
std::int64_t n_weight(const RepDescriptor& rep, RayDir nu, IndexPair idx);

// Sign partition of the index set; requires a transverse ray meeting the image.
std::pair<std::vector<IndexPair>, std::vector<IndexPair>> partition(const RepDescriptor& rep, RayDir nu);

WeightVectorPair weight_vectors(const RepDescriptor& rep, RayDir nu);

// The DH conic reduction of the projectivized representation along nu.
VarietyDescriptor classify(const RepDescriptor& rep, RayDir nu);

// Index quadruple of one 2x2 minor T_ij T_ab - T_ib T_aj.
struct SegreGenerator {
    int i, j, a, b; // 0 <= i < a <= p-1, 0 <= j < b <= q-1
};

std::vector<SegreGenerator> segre_generators(int p, int q);

// Degrees of the two monomials of a minor under deg_c(T_ij) = a_i + b_j.
std::pair<std::int64_t, std::int64_t> generator_degrees(const SegreGenerator& g,
                                                        std::span<const std::int64_t> a,
                                                        std::span<const std::int64_t> b);

// Quotient circle weights l_a + j of a uniform representation; nu-independent.
std::vector<std::pair<IndexPair, std::int64_t>> quotient_weights_uniform(const RepDescriptor& rep);

// Whether all probes strictly inside the wedge give the same sign partition.
bool wedge_partition_constant(const RepDescriptor& rep, const Wedge& wedge, std::span<const RayDir> probes);

// Circle weights nu1 j - nu2 (k - j), j = 1..k, for the irreducible case.
std::vector<std::int64_t> mu_k_weights(std::int64_t k, RayDir nu);

IsotopyEndpoints isotopy_endpoints(std::int64_t k, RayDir nu);

// Betti table of the conic reduction: out_q = base_q + base_{q-2}.
BettiTable betti_conic_reduction(const BettiTable& base);

// Betti table of the product with P^1: convolution with [1, 0, 1].
BettiTable betti_product_P1(const BettiTable& base);

// Rational Betti numbers of a weighted projective space of given dimension.
BettiTable betti_wps(std::int64_t complex_dim);

} // namespace conred
