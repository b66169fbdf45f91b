// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "conred/classify.hpp"
#include "conred/verify.hpp"

using namespace conred;

namespace {

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

bool check(bool& ok, bool condition) {
    ok = ok && condition;
    return condition;
}

std::vector<RepDescriptor> enumerated_family() {
    std::vector<RepDescriptor> out;
    std::vector<std::pair<std::int64_t, std::int64_t>> alphabet;
    for (std::int64_t k = 0; k <= 5; ++k)
        for (std::int64_t l = -2; l <= 2; ++l)
            alphabet.emplace_back(l, k);
    const auto push_if_ok = [&](std::vector<std::pair<std::int64_t, std::int64_t>> raw) {
        const RepDescriptor rep = RepDescriptor::validate(raw);
        if (is_generic(rep) && moment_never_zero(rep))
            out.push_back(rep);
    };
    for (const auto& a : alphabet)
        push_if_ok({a});
    for (const auto& a : alphabet)
        for (const auto& b : alphabet)
            push_if_ok({a, b});
    const std::size_t n = alphabet.size();
    for (std::size_t t = 0; t < n * n * n; t += 97)
        push_if_ok({alphabet[t / (n * n)], alphabet[(t / n) % n], alphabet[t % n]});
    return out;
}

// 1. psi_transverse is critical exactly on the primitive nu_{k_a, j, l_a}
//    directions, with the right rank degeneracies at the witnessing points.
bool criterion_critical_rays(std::string& detail) {
    bool ok = true;
    const auto family = enumerated_family();
    std::size_t rays_checked = 0, probes_checked = 0;
    for (const RepDescriptor& rep : family) {
        const CriticalRaySet rays = critical_rays(rep);
        for (const CriticalRay& r : rays) {
            ++rays_checked;
            for (std::int64_t m : {std::int64_t{1}, std::int64_t{3}}) {
                const auto verdict = psi_transverse(rep, RayDir{m * r.dir.x, m * r.dir.y});
                check(ok, verdict.verdict == Verdict::critical);
                check(ok, verdict.witnesses == r.witnesses);
            }
            for (const IndexPair& w : r.witnesses) {
                const auto fields = fundamental_fields(rep, ProjVector::basis_vector(rep, w));
                check(ok, numeric_rank({fields[0], fields[1], fields[2], fields[3]}, 1e-8) <= 3);
                check(ok, numeric_rank({fields[2], fields[3]}, 1e-8) <= 1);
            }
        }
        for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
            const RayDir mid{rays[i].dir.x + rays[i + 1].dir.x, rays[i].dir.y + rays[i + 1].dir.y};
            check(ok, psi_transverse(rep, mid).verdict == Verdict::transverse);
            ++probes_checked;
        }
        const RayDir f = rays.front().dir;
        const RayDir l = rays.back().dir;
        check(ok, psi_transverse(rep, RayDir{f.x + f.y, f.y - f.x}).verdict == Verdict::misses_image);
        check(ok, psi_transverse(rep, RayDir{l.x - l.y, l.y + l.x}).verdict == Verdict::misses_image);
        probes_checked += 2;
    }
    check(ok, family.size() >= 40);
    std::ostringstream os;
    os << family.size() << " reps, " << rays_checked << " critical rays, " << probes_checked
       << " transverse/outside probes";
    detail = os.str();
    return ok;
}

const std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> kStandardReps{
    {{0, 2}}, {{0, 3}}, {{0, 1}, {0, 1}}, {{1, 2}}, {{0, 2}, {1, 0}}};

// 2. Eigenvalue and diagonal pairs stay inside the exact polytope; per-block
//    matrices are positive semidefinite of the right trace.
bool criterion_image_containment(std::string& detail) {
    bool ok = true;
    double worst_margin = 0.0, worst_block = 0.0;
    for (const auto& raw : kStandardReps) {
        const RepDescriptor rep = RepDescriptor::validate(raw);
        const Polygon2 poly = moment_polytope(rep);
        for (int i = 0; i < 10000; ++i) {
            SplitMix64 rng(substream(1001, 2, static_cast<std::uint64_t>(i)));
            const ProjVector Z = ProjVector::from_flat(rep, sample_unit(rep.dim(), rng));
            const Hermitian2 H = phi_rep(rep, Z);
            const auto [l1, l2] = H.eigenvalues();
            const double margin =
                std::min(containment_margin(poly, l1, l2), containment_margin(poly, H.h11, H.h22));
            worst_margin = std::min(worst_margin, margin);
            check(ok, margin >= -1e-9);
            if (rep.r() == 1) {
                const Summand& s = rep.summand(1);
                const Hermitian2 S{H.h11 - double(s.l), H.h22 - double(s.l), H.h12};
                const double defect =
                    std::max(std::max(0.0, -S.eigenvalues().second), std::abs(S.trace() - double(s.k)));
                worst_block = std::max(worst_block, defect);
                check(ok, defect <= 1e-12);
            }
        }
    }
    std::ostringstream os;
    os << "5 reps x 10^4 samples, worst margin " << worst_margin << ", worst block defect " << worst_block;
    detail = os.str();
    return ok;
}

// 3. Central-difference equivariance residuals with second-order decay.
bool criterion_equivariance(std::string& detail) {
    bool ok = true;
    double worst = 0.0;
    std::int64_t ratio_checks = 0;
    for (const auto& raw : kStandardReps) {
        const RepDescriptor rep = RepDescriptor::validate(raw);
        for (int i = 0; i < 1000; ++i) {
            SplitMix64 rng(substream(1003, 3, static_cast<std::uint64_t>(i)));
            const ProjVector Z = ProjVector::from_flat(rep, sample_unit(rep.dim(), rng));
            Eigen::Matrix2cd gen = rng.normal() * LieElement::eta().matrix() +
                                   rng.normal() * LieElement::xi().matrix() +
                                   rng.normal() * LieElement::rho().matrix() +
                                   rng.normal() * LieElement::gamma().matrix();
            gen /= gen.norm();
            const LieElement alpha(gen);
            const double r1 = equivariance_residual(rep, Z, alpha, 1e-4);
            worst = std::max(worst, r1);
            check(ok, r1 <= 1e-6);
            if (r1 > 1e-10) {
                const double ratio = equivariance_residual(rep, Z, alpha, 2e-4) / r1;
                check(ok, ratio >= 3.5 && ratio <= 4.5);
                ++ratio_checks;
            }
        }
    }
    std::ostringstream os;
    os << "5 reps x 10^3 pairs, max residual " << worst << ", " << ratio_checks << " ratio checks";
    detail = os.str();
    return ok;
}

// 4. Closed-form exponential against the truncated series, with anchors.
bool criterion_exp(std::string& detail) {
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        SplitMix64 rng(substream(1004, 4, static_cast<std::uint64_t>(i)));
        const cd z =
            std::polar(std::numbers::pi * std::sqrt(rng.uniform01()), 2 * std::numbers::pi * rng.uniform01());
        const Eigen::Matrix2cd U = exp_antidiag(z);
        const double defect =
            std::max((U - exp_antidiag_series(z, 40)).cwiseAbs().maxCoeff(),
                     (U.adjoint() * U - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
        worst = std::max(worst, defect);
        check(ok, defect <= 1e-12);
    }
    const double a0 = (exp_antidiag(cd(0, 0)) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
    Eigen::Matrix2cd gamma;
    gamma << cd(0, 0), cd(0, 1), cd(0, 1), cd(0, 0);
    const double a1 = (exp_antidiag(cd(std::numbers::pi / 2, 0)) - gamma).cwiseAbs().maxCoeff();
    check(ok, a0 <= 1e-15 && a1 <= 1e-15);
    std::ostringstream os;
    os << "10^3 draws, max defect " << worst << ", anchors " << std::max(a0, a1);
    detail = os.str();
    return ok;
}

// 5. The three named classifications, exactly.
bool criterion_classifications(std::string& detail) {
    bool ok = true;
    {
        const auto v = classify(RepDescriptor::validate({{0, 2}}), RayDir{3, 1});
        const auto* w = std::get_if<PlainWPS>(&v);
        check(ok, w && w->weights == std::vector<std::int64_t>{1, 2} &&
                      w->raw_weights == std::vector<std::int64_t>{4, 8});
    }
    {
        const auto v = classify(RepDescriptor::validate({{0, 3}}), RayDir{5, 1});
        const auto* w = std::get_if<PlainWPS>(&v);
        check(ok, w && w->weights == std::vector<std::int64_t>{1, 2, 3});
    }
    {
        const auto v = classify(RepDescriptor::validate({{0, 1}, {0, 1}}), RayDir{2, 1});
        const auto* s = std::get_if<SegreQuotient>(&v);
        check(ok, s && s->a == std::vector<std::int64_t>{2, 2} && s->b == std::vector<std::int64_t>{1, 1});
    }
    detail = "P(1,2), P(1,2,3), Segre a=(2,2) b=(1,1)";
    return ok;
}

// 6. Determinantal generators are deg_c-homogeneous with the right count.
bool criterion_segre(std::string& detail) {
    bool ok = true;
    std::int64_t generators = 0;
    for (int p = 2; p <= 6; ++p)
        for (int q = 2; q <= 6; ++q) {
            const auto gens = segre_generators(p, q);
            check(ok, static_cast<std::int64_t>(gens.size()) ==
                          std::int64_t(p) * (p - 1) / 2 * (std::int64_t(q) * (q - 1) / 2));
            for (int trial = 0; trial < 20; ++trial) {
                SplitMix64 rng(substream(1006, 6, static_cast<std::uint64_t>(p * 1000 + q * 100 + trial)));
                std::vector<std::int64_t> a(static_cast<std::size_t>(p)), b(static_cast<std::size_t>(q));
                for (auto& x : a)
                    x = 1 + static_cast<std::int64_t>(rng.next() % 9);
                for (auto& x : b)
                    x = 1 + static_cast<std::int64_t>(rng.next() % 9);
                for (const SegreGenerator& g : gens) {
                    const auto [d1, d2] = generator_degrees(g, a, b);
                    check(ok, d1 == d2);
                    ++generators;
                }
            }
        }
    std::ostringstream os;
    os << generators << " generator-degree identities";
    detail = os.str();
    return ok;
}

// 7. The two Betti routes agree as functions.
bool criterion_betti(std::string& detail) {
    bool ok = true;
    check(ok, betti_conic_reduction({1, 0, 1}) == BettiTable{1, 0, 2, 0, 1});
    for (int trial = 0; trial < 100; ++trial) {
        SplitMix64 rng(substream(1007, 7, static_cast<std::uint64_t>(trial)));
        BettiTable base(1 + rng.next() % 8);
        for (auto& b : base)
            b = static_cast<std::int64_t>(rng.next() % 10);
        check(ok, betti_product_P1(base) == betti_conic_reduction(base));
    }
    detail = "100 random tables plus the anchor";
    return ok;
}

// 8. The level-set sampler and torus local-freeness at its points.
bool criterion_mtnu_sampler(std::string& detail) {
    bool ok = true;
    double worst_level = 0.0, worst_prop = 0.0;
    const std::vector<std::pair<std::vector<std::pair<std::int64_t, std::int64_t>>, RayDir>> cases{
        {{{0, 2}}, RayDir{3, 1}}, {{{0, 1}, {0, 1}}, RayDir{2, 1}}, {{{1, 2}}, RayDir{5, 2}}};
    for (const auto& [raw, nu] : cases) {
        const RepDescriptor rep = RepDescriptor::validate(raw);
        for (int i = 0; i < 1000; ++i) {
            SplitMix64 rng(substream(1008, 8, static_cast<std::uint64_t>(i)));
            const ProjVector Z = sample_mtnu(rep, nu, rng);
            const Eigen::VectorXcd flat = Z.flatten();
            double level = 0.0;
            for (const IndexPair& idx : index_set(rep))
                level += double(n_weight(rep, nu, idx)) * std::norm(flat(rep.flat_index(idx)));
            worst_level = std::max(worst_level, std::abs(level));
            check(ok, std::abs(level) <= 1e-12);
            const auto [h11, h22] = psi_rep(rep, Z);
            const double nn = double(nu.x) * nu.x + double(nu.y) * nu.y;
            const double t = (h11 * nu.x + h22 * nu.y) / nn;
            const double prop = std::hypot(h11 - t * nu.x, h22 - t * nu.y);
            worst_prop = std::max(worst_prop, prop);
            check(ok, t > 0.0 && prop <= 1e-9);
            const auto fields = fundamental_fields(rep, Z);
            check(ok, numeric_rank({fields[2], fields[3]}, 1e-8) == 2);
        }
    }
    std::ostringstream os;
    os << "3 cases x 10^3 samples, max level residual " << worst_level << ", max ray distance " << worst_prop;
    detail = os.str();
    return ok;
}

// 9. Sign partitions are constant across wedge interiors.
bool criterion_wedge_constancy(std::string& detail) {
    bool ok = true;
    int wedges_checked = 0;
    for (const auto& raw :
         std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>{{{0, 2}}, {{0, 3}}}) {
        const RepDescriptor rep = RepDescriptor::validate(raw);
        const auto ws = wedges(rep);
        for (const Wedge& w : ws) {
            std::vector<RayDir> probes;
            SplitMix64 rng(substream(1009, 9, static_cast<std::uint64_t>(wedges_checked)));
            for (int i = 0; i < 10; ++i) {
                const std::int64_t m = 1 + static_cast<std::int64_t>(rng.next() % 20);
                const std::int64_t n = 1 + static_cast<std::int64_t>(rng.next() % 20);
                probes.push_back(RayDir{m * w.lo.x + n * w.hi.x, m * w.lo.y + n * w.hi.y});
            }
            check(ok, wedge_partition_constant(rep, w, probes));
            ++wedges_checked;
            // a probe on the wedge boundary must be rejected
            try {
                std::vector<RayDir> bad{w.lo};
                wedge_partition_constant(rep, w, bad);
                check(ok, false);
            } catch (const Error& e) {
                check(ok, e.code() == errc::probe_outside_wedge);
            }
        }
    }
    std::ostringstream os;
    os << wedges_checked << " wedges x 10 interior probes, boundary probes rejected";
    detail = os.str();
    return ok;
}

// 10. Euclidean norm bound on the weighted sphere in the steep range.
bool criterion_norm_bound(std::string& detail) {
    bool ok = true;
    double worst = -1.0;
    for (std::int64_t k = 2; k <= 5; ++k) {
        for (const RayDir nu : {RayDir{2 * (k - 1), 1}, RayDir{10 * k, 1}}) {
            const auto weights_int = mu_k_weights(k, nu);
            const std::vector<double> weights(weights_int.begin(), weights_int.end());
            const double bound = 2.0 / double(nu.x) + 1e-12;
            for (int i = 0; i < 10000; ++i) {
                SplitMix64 rng(substream(1010, 10, static_cast<std::uint64_t>(i)));
                const double n2 = sample_weighted_sphere(weights, rng).squaredNorm();
                worst = std::max(worst, n2 - 2.0 / double(nu.x));
                check(ok, n2 <= bound);
            }
        }
    }
    std::ostringstream os;
    os << "k in 2..5, two rays each, 10^4 samples; max excess " << worst;
    detail = os.str();
    return ok;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "critical-ray equivalence and witness ranks", 10.0, criterion_critical_rays},
        {2, "image containment", 30.0, criterion_image_containment},
        {3, "equivariance finite differences", 30.0, criterion_equivariance},
        {4, "antidiagonal exponential vs series", 5.0, criterion_exp},
        {5, "DH classifications reproduced", 1.0, criterion_classifications},
        {6, "Segre generator homogeneity", 5.0, criterion_segre},
        {7, "Betti route consistency", 1.0, criterion_betti},
        {8, "level-set sampler and torus rank", 10.0, criterion_mtnu_sampler},
        {9, "wedge partition constancy", 1.0, criterion_wedge_constancy},
        {10, "weighted-sphere norm bound", 10.0, criterion_norm_bound},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool pass = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            pass = c.body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed >= c.budget_seconds) {
            pass = false;
            detail += " [over budget]";
        }
        if (!pass)
            ++failures;
        std::printf("[criterion %2d] %s  %s (%s; %.2fs < %.0fs)\n", c.id, pass ? "PASS" : "FAIL",
                    c.name.c_str(), detail.c_str(), elapsed, c.budget_seconds);
    }
    return failures == 0 ? 0 : 1;
}
