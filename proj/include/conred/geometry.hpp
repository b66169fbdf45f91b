#pragma once

#include <cstdint>
#include <vector>

#include "conred/rep.hpp"

namespace conred {

// Exact rational over int64 with normalized sign (den > 0) and gcd 1.
// Magnitudes in this artifact stay tiny; intermediates use 128-bit products.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1);

    friend Rational operator+(Rational a, Rational b);
    friend Rational operator-(Rational a, Rational b);
    friend Rational operator*(Rational a, Rational b);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(Rational a, Rational b) {
        return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// A primitive integer direction; stands for the open ray R_+ (x, y).
struct RayDir {
    std::int64_t x = 0;
    std::int64_t y = 0;

    RayDir(std::int64_t x, std::int64_t y); // reduces by gcd, rejects (0, 0)
    friend bool operator==(const RayDir&, const RayDir&) = default;
};

std::int64_t cross(RayDir a, RayDir b);

struct RatPoint {
    Rational x, y;
    friend bool operator==(const RatPoint&, const RatPoint&) = default;
};

// Convex polygon with minimal counterclockwise vertex list. Degenerate hulls
// are allowed: one vertex (point) or two (segment).
struct Polygon2 {
    std::vector<RatPoint> vertices;
};

struct CriticalRay {
    RayDir dir;
    std::vector<IndexPair> witnesses; // (a, j) with nu_{k_a, j, l_a} on this ray, lex order
};

// Critical rays in increasing angular order within their open half-plane.
using CriticalRaySet = std::vector<CriticalRay>;

// Open angular sector between two consecutive critical rays.
struct Wedge {
    RayDir lo;
    RayDir hi;
    friend bool operator==(const Wedge&, const Wedge&) = default;
};

enum class Verdict { transverse, critical, misses_image };

struct TransversalityReport {
    Verdict verdict = Verdict::transverse;
    std::vector<IndexPair> witnesses; // populated for critical verdicts
};

// Endpoints (k+l, l) and (l, k+l) of the diagonal moment image of one summand;
// a single point when k = 0.
std::pair<std::pair<std::int64_t, std::int64_t>, std::pair<std::int64_t, std::int64_t>>
segment_Jkl(std::int64_t k, std::int64_t l);

// Exact convex hull of all segment endpoints. Requires a generic descriptor.
Polygon2 moment_polytope(const RepDescriptor& rep);

// Primitive directions of the nu_{k_a, j, l_a}, grouped by ray and sorted by
// angle. Requires moment_never_zero.
CriticalRaySet critical_rays(const RepDescriptor& rep);

// Whether R_+ nu intersects the moment polytope (exact test).
bool ray_meets_image(const RepDescriptor& rep, RayDir nu);

// Transversality of the torus moment map to R_+ nu.
TransversalityReport psi_transverse(const RepDescriptor& rep, RayDir nu);

// Transversality of the full moment map to the cone over O_nu. Defined only
// away from the diagonal (nu1 != nu2); agrees with psi_transverse there.
TransversalityReport phi_transverse(const RepDescriptor& rep, RayDir nu);

// Sectors between consecutive critical rays, covering the image cone.
std::vector<Wedge> wedges(const RepDescriptor& rep);

// Index of the unique wedge whose open sector contains nu.
std::size_t wedge_of(const RepDescriptor& rep, RayDir nu);

bool strictly_inside(const Wedge& w, RayDir nu);

// Floating-point inclusion margin of (x, y) in the polygon: nonnegative
// inside, negative outside; degenerate hulls use minus the distance to them.
double containment_margin(const Polygon2& poly, double x, double y);

} // namespace conred
