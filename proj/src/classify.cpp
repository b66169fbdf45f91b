#include "conred/classify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace conred {

namespace {

std::int64_t gcd_all(std::span<const std::int64_t> v) {
    std::int64_t g = 0;
    for (std::int64_t x : v)
        g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

PlainWPS make_wps(std::vector<std::int64_t> raw) {
    PlainWPS w;
    w.raw_weights = raw;
    const std::int64_t g = gcd_all(raw);
    for (std::int64_t& x : raw)
        x /= g > 0 ? g : 1;
    w.weights = std::move(raw);
    w.complex_dim = static_cast<std::int64_t>(w.weights.size()) - 1;
    return w;
}

void require_uniform(const RepDescriptor& rep) {
    if (!is_uniform(rep))
        raise(errc::not_uniform, "representation is not uniform: k_a + 2 l_a is not constant or genericity fails");
}

} // namespace

std::int64_t n_weight(const RepDescriptor& rep, RayDir nu, IndexPair idx) {
    const Summand& s = rep.summand(idx.a);
    return -nu.y * (s.k - idx.j + s.l) + nu.x * (s.l + idx.j);
}

std::pair<std::vector<IndexPair>, std::vector<IndexPair>> partition(const RepDescriptor& rep, RayDir nu) {
    if (!moment_never_zero(rep))
        raise(errc::moment_hits_zero, "moment map image contains the origin");
    if (!is_generic(rep))
        raise(errc::not_generic, "representation is not generic");
    if (!ray_meets_image(rep, nu))
        raise(errc::empty_side, "ray misses the moment image, no two-sided partition exists");
    std::vector<IndexPair> P, N, zeros;
    for (const IndexPair& idx : index_set(rep)) {
        const std::int64_t n = n_weight(rep, nu, idx);
        if (n > 0)
            P.push_back(idx);
        else if (n < 0)
            N.push_back(idx);
        else
            zeros.push_back(idx);
    }
    if (!zeros.empty())
        raise(errc::critical_ray, "ray is critical: n_nu vanishes at some index", zeros);
    if (P.empty() || N.empty())
        raise(errc::empty_side, "sign partition has an empty side");
    return {std::move(P), std::move(N)};
}

WeightVectorPair weight_vectors(const RepDescriptor& rep, RayDir nu) {
    auto [P, N] = partition(rep, nu);
    WeightVectorPair w;
    w.a_sources = std::move(P);
    w.b_sources = std::move(N);
    for (const IndexPair& idx : w.a_sources)
        w.a.push_back(std::abs(n_weight(rep, nu, idx)));
    for (const IndexPair& idx : w.b_sources)
        w.b.push_back(std::abs(n_weight(rep, nu, idx)));
    return w;
}

VarietyDescriptor classify(const RepDescriptor& rep, RayDir nu) {
    const WeightVectorPair w = weight_vectors(rep, nu);
    const std::size_t p = w.a.size(), q = w.b.size();
    if (p == 1 || q == 1) {
        // One side is a single coordinate; the reduction collapses to a plain
        // weighted projective space with the singleton weight added throughout.
        const std::vector<std::int64_t>& longside = p == 1 ? w.b : w.a;
        const std::int64_t single = p == 1 ? w.a[0] : w.b[0];
        std::vector<std::int64_t> raw;
        raw.reserve(longside.size());
        for (std::int64_t x : longside)
            raw.push_back(x + single);
        return make_wps(std::move(raw));
    }
    SegreQuotient sq;
    sq.a = w.a;
    sq.b = w.b;
    sq.c.assign(p, std::vector<std::int64_t>(q));
    sq.d.assign(p, std::vector<std::int64_t>(q));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            sq.c[i][j] = w.a[i] + w.b[j];
            const __int128 dij = static_cast<__int128>(w.a[i]) * w.b[j];
            if (dij > std::numeric_limits<std::int64_t>::max())
                raise(errc::out_of_range, "metric weights a_i * b_j exceed the exact range");
            sq.d[i][j] = static_cast<std::int64_t>(dij);
        }
    sq.generators = static_cast<std::int64_t>(p * (p - 1) / 2 * (q * (q - 1) / 2));
    sq.complex_dim = static_cast<std::int64_t>(p + q) - 2;
    return sq;
}

std::vector<SegreGenerator> segre_generators(int p, int q) {
    if (p < 2 || q < 2)
        raise(errc::too_small, "segre_generators requires p, q >= 2");
    std::vector<SegreGenerator> out;
    out.reserve(static_cast<std::size_t>(p) * (p - 1) / 2 * q * (q - 1) / 2);
    for (int i = 0; i < p; ++i)
        for (int a = i + 1; a < p; ++a)
            for (int j = 0; j < q; ++j)
                for (int b = j + 1; b < q; ++b)
                    out.push_back(SegreGenerator{i, j, a, b});
    return out;
}

std::pair<std::int64_t, std::int64_t> generator_degrees(const SegreGenerator& g,
                                                        std::span<const std::int64_t> a,
                                                        std::span<const std::int64_t> b) {
    const auto deg = [&](int i, int j) { return a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(j)]; };
    return {deg(g.i, g.j) + deg(g.a, g.b), deg(g.i, g.b) + deg(g.a, g.j)};
}

std::vector<std::pair<IndexPair, std::int64_t>> quotient_weights_uniform(const RepDescriptor& rep) {
    require_uniform(rep);
    std::vector<std::pair<IndexPair, std::int64_t>> out;
    for (const IndexPair& idx : index_set(rep))
        out.emplace_back(idx, rep.summand(idx.a).l + idx.j);
    return out;
}

bool wedge_partition_constant(const RepDescriptor& rep, const Wedge& wedge, std::span<const RayDir> probes) {
    require_uniform(rep);
    std::optional<std::pair<std::vector<IndexPair>, std::vector<IndexPair>>> first;
    for (const RayDir& probe : probes) {
        if (!strictly_inside(wedge, probe))
            raise(errc::probe_outside_wedge, "probe is not strictly inside the wedge");
        auto part = partition(rep, probe);
        if (!first)
            first = std::move(part);
        else if (part != *first)
            return false;
    }
    return true;
}

std::vector<std::int64_t> mu_k_weights(std::int64_t k, RayDir nu) {
    if (k < 2)
        raise(errc::out_of_range, "mu_k_weights requires k >= 2");
    if (!(nu.y > 0 && nu.x > (k - 1) * nu.y))
        raise(errc::out_of_range, "mu_k_weights requires nu1 > (k - 1) nu2 > 0");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::int64_t j = 1; j <= k; ++j)
        out.push_back(nu.x * j - nu.y * (k - j));
    return out;
}

IsotopyEndpoints isotopy_endpoints(std::int64_t k, RayDir nu) {
    if (k < 2)
        raise(errc::out_of_range, "isotopy_endpoints requires k >= 2");
    if (!(nu.y > 0 && nu.x > (k - 1) * nu.y))
        raise(errc::out_of_range, "isotopy_endpoints requires nu1 > (k - 1) nu2 > 0");
    std::vector<std::int64_t> ambient, divisor;
    for (std::int64_t j = 1; j <= k; ++j)
        ambient.push_back(j);
    for (std::int64_t j = 2; j <= k; ++j)
        divisor.push_back(j);
    IsotopyEndpoints e;
    e.ambient = make_wps(std::move(ambient));
    e.divisor = make_wps(std::move(divisor));
    return e;
}

BettiTable betti_conic_reduction(const BettiTable& base) {
    if (base.empty())
        return {};
    BettiTable out(base.size() + 2, 0);
    for (std::size_t q = 0; q < out.size(); ++q) {
        if (q < base.size())
            out[q] += base[q];
        if (q >= 2 && q - 2 < base.size())
            out[q] += base[q - 2];
    }
    return out;
}

BettiTable betti_product_P1(const BettiTable& base) {
    if (base.empty())
        return {};
    const BettiTable p1{1, 0, 1};
    BettiTable out(base.size() + p1.size() - 1, 0);
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = 0; j < p1.size(); ++j)
            out[i + j] += base[i] * p1[j];
    return out;
}

BettiTable betti_wps(std::int64_t complex_dim) {
    if (complex_dim < 0)
        raise(errc::out_of_range, "betti_wps requires a nonnegative dimension");
    BettiTable out(static_cast<std::size_t>(2 * complex_dim + 1), 0);
    for (std::size_t i = 0; i < out.size(); i += 2)
        out[i] = 1;
    return out;
}

} // namespace conred
