#include "conred/geometry.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace conred {

namespace {

using i64 = std::int64_t;
using i128 = __int128;
using LPoint = std::array<i64, 2>;

// Bounds under which every integer predicate below is provably exact.
constexpr i64 kMaxRayCoord = 1'000'000;

i64 gcd64(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

i128 cross128(const LPoint& o, const LPoint& a, const LPoint& b) {
    return static_cast<i128>(a[0] - o[0]) * (b[1] - o[1]) - static_cast<i128>(a[1] - o[1]) * (b[0] - o[0]);
}

int sign(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Monotone chain with strict turns; collinear points are dropped so the
// vertex list is minimal. Output is counterclockwise from the lex-min vertex.
std::vector<LPoint> lattice_hull(std::vector<LPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2)
        return pts;
    std::vector<LPoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && cross128(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) { // upper
        while (k >= t && cross128(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<LPoint> segment_endpoints(const RepDescriptor& rep) {
    std::vector<LPoint> pts;
    pts.reserve(2 * static_cast<std::size_t>(rep.r()));
    for (const Summand& s : rep.summands()) {
        pts.push_back({s.k + s.l, s.l});
        pts.push_back({s.l, s.k + s.l});
    }
    return pts;
}

std::vector<LPoint> image_hull(const RepDescriptor& rep) { return lattice_hull(segment_endpoints(rep)); }

i64 cross_ray_point(RayDir nu, const LPoint& p) { return nu.x * p[1] - nu.y * p[0]; }
i64 dot_ray_point(RayDir nu, const LPoint& p) { return nu.x * p[0] + nu.y * p[1]; }

// The integer lattice direction nu_{k,j,l} = (k - j + l, j + l).
LPoint nu_point(const Summand& s, int j) { return {s.k - j + s.l, s.l + j}; }

// True iff the open ray R_+ nu meets the segment [u, v]. Handles collinear
// and endpoint-on-line configurations exactly.
bool ray_meets_segment(RayDir nu, const LPoint& u, const LPoint& v) {
    const i64 cu = cross_ray_point(nu, u);
    const i64 cv = cross_ray_point(nu, v);
    if (cu == 0 && dot_ray_point(nu, u) > 0)
        return true;
    if (cv == 0 && dot_ray_point(nu, v) > 0)
        return true;
    if (sign(cu) * sign(cv) >= 0)
        return false;
    // Strict crossing of the line through nu; the crossing point scaled by
    // (cu - cv) is cu * v - cv * u, so its position along the ray has the
    // sign of dot(nu, cu * v - cv * u) * sign(cu - cv).
    const i128 qx = static_cast<i128>(cu) * v[0] - static_cast<i128>(cv) * u[0];
    const i128 qy = static_cast<i128>(cu) * v[1] - static_cast<i128>(cv) * u[1];
    const i128 d = static_cast<i128>(nu.x) * qx + static_cast<i128>(nu.y) * qy;
    return sign(d) * sign(static_cast<i128>(cu) - cv) > 0;
}

bool ray_meets_hull(RayDir nu, const std::vector<LPoint>& hull) {
    const std::size_t n = hull.size();
    if (n == 0)
        return false;
    if (n == 1)
        return cross_ray_point(nu, hull[0]) == 0 && dot_ray_point(nu, hull[0]) > 0;
    if (n == 2)
        return ray_meets_segment(nu, hull[0], hull[1]);
    for (std::size_t i = 0; i < n; ++i)
        if (ray_meets_segment(nu, hull[i], hull[(i + 1) % n]))
            return true;
    return false;
}

void require_generic(const RepDescriptor& rep) {
    if (!is_generic(rep))
        raise(errc::not_generic, "representation is not generic: a det^l (x) C^2 summand occurs with multiplicity 1");
}

void require_moment_never_zero(const RepDescriptor& rep) {
    if (!moment_never_zero(rep))
        raise(errc::moment_hits_zero, "moment map image contains the origin: k_a + 2 l_a changes sign or vanishes");
}

} // namespace

Rational::Rational(i64 n, i64 d) : num(n), den(d) {
    if (den == 0)
        throw std::invalid_argument("Rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (const i64 g = gcd64(num, den); g > 1) {
        num /= g;
        den /= g;
    }
}

namespace {
Rational make_rational_128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const i128 a = n < 0 ? -n : n;
    i128 g = 1;
    for (i128 x = a, y = d; y != 0;) {
        const i128 t = x % y;
        x = y;
        y = t;
        g = x;
    }
    if (g > 1) {
        n /= g;
        d /= g;
    }
    constexpr i128 lo = std::numeric_limits<i64>::min(), hi = std::numeric_limits<i64>::max();
    if (n < lo || n > hi || d > hi)
        raise(errc::out_of_range, "rational arithmetic overflowed the 64-bit range");
    return Rational{static_cast<i64>(n), static_cast<i64>(d)};
}
} // namespace

Rational operator+(Rational a, Rational b) {
    return make_rational_128(static_cast<i128>(a.num) * b.den + static_cast<i128>(b.num) * a.den,
                             static_cast<i128>(a.den) * b.den);
}
Rational operator-(Rational a, Rational b) {
    return make_rational_128(static_cast<i128>(a.num) * b.den - static_cast<i128>(b.num) * a.den,
                             static_cast<i128>(a.den) * b.den);
}
Rational operator*(Rational a, Rational b) {
    return make_rational_128(static_cast<i128>(a.num) * b.num, static_cast<i128>(a.den) * b.den);
}

RayDir::RayDir(i64 X, i64 Y) : x(X), y(Y) {
    if (x == 0 && y == 0)
        raise(errc::out_of_range, "ray direction must be nonzero");
    if (const i64 g = gcd64(x, y); g > 1) {
        x /= g;
        y /= g;
    }
    if (x < -kMaxRayCoord || x > kMaxRayCoord || y < -kMaxRayCoord || y > kMaxRayCoord)
        raise(errc::out_of_range, "primitive ray coordinates exceed the exact-arithmetic bound of 1e6");
}

i64 cross(RayDir a, RayDir b) { return a.x * b.y - a.y * b.x; }

std::pair<std::pair<i64, i64>, std::pair<i64, i64>> segment_Jkl(i64 k, i64 l) {
    return {{k + l, l}, {l, k + l}};
}

Polygon2 moment_polytope(const RepDescriptor& rep) {
    require_generic(rep);
    Polygon2 poly;
    for (const LPoint& p : image_hull(rep))
        poly.vertices.push_back(RatPoint{Rational{p[0]}, Rational{p[1]}});
    return poly;
}

CriticalRaySet critical_rays(const RepDescriptor& rep) {
    require_moment_never_zero(rep);
    CriticalRaySet rays;
    for (int a = 1; a <= rep.r(); ++a) {
        const Summand& s = rep.summand(a);
        for (int j = 0; j <= s.k; ++j) {
            const LPoint p = nu_point(s, j);
            assert(p[0] != 0 || p[1] != 0); // excluded by moment_never_zero
            const RayDir dir{p[0], p[1]};
            auto it = std::find_if(rays.begin(), rays.end(), [&](const CriticalRay& r) { return r.dir == dir; });
            if (it == rays.end())
                rays.push_back(CriticalRay{dir, {IndexPair{a, j}}});
            else
                it->witnesses.push_back(IndexPair{a, j});
        }
    }
    // All rays live in one open half-plane (trace of fixed sign), so the
    // pairwise cross product is a strict angular order.
    std::sort(rays.begin(), rays.end(),
              [](const CriticalRay& a, const CriticalRay& b) { return cross(a.dir, b.dir) > 0; });
    return rays;
}

bool ray_meets_image(const RepDescriptor& rep, RayDir nu) {
    require_generic(rep);
    return ray_meets_hull(nu, image_hull(rep));
}

TransversalityReport psi_transverse(const RepDescriptor& rep, RayDir nu) {
    require_moment_never_zero(rep);
    require_generic(rep);
    for (const CriticalRay& r : critical_rays(rep))
        if (r.dir == nu)
            return TransversalityReport{Verdict::critical, r.witnesses};
    if (!ray_meets_image(rep, nu))
        return TransversalityReport{Verdict::misses_image, {}};
    return TransversalityReport{Verdict::transverse, {}};
}

TransversalityReport phi_transverse(const RepDescriptor& rep, RayDir nu) {
    if (nu.x == nu.y)
        raise(errc::diagonal_ray, "nu1 = nu2 lies outside the supported range for the full moment map");
    require_moment_never_zero(rep);
    require_generic(rep);
    // Definitional scan over index pairs, independent of the grouped ray set.
    std::vector<IndexPair> witnesses;
    for (int a = 1; a <= rep.r(); ++a) {
        const Summand& s = rep.summand(a);
        for (int j = 0; j <= s.k; ++j) {
            const LPoint p = nu_point(s, j);
            if (RayDir{p[0], p[1]} == nu)
                witnesses.push_back(IndexPair{a, j});
        }
    }
    if (!witnesses.empty())
        return TransversalityReport{Verdict::critical, std::move(witnesses)};
    if (!ray_meets_image(rep, nu))
        return TransversalityReport{Verdict::misses_image, {}};
    return TransversalityReport{Verdict::transverse, {}};
}

std::vector<Wedge> wedges(const RepDescriptor& rep) {
    require_moment_never_zero(rep);
    require_generic(rep);
    const CriticalRaySet rays = critical_rays(rep);
    std::vector<Wedge> out;
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
        out.push_back(Wedge{rays[i].dir, rays[i + 1].dir});
    return out;
}

std::size_t wedge_of(const RepDescriptor& rep, RayDir nu) {
    require_moment_never_zero(rep);
    require_generic(rep);
    if (!ray_meets_image(rep, nu))
        raise(errc::outside_image, "ray misses the moment image");
    const CriticalRaySet rays = critical_rays(rep);
    for (const CriticalRay& r : rays)
        if (r.dir == nu)
            raise(errc::on_boundary, "ray is critical, on a wedge boundary", r.witnesses);
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
        if (cross(rays[i].dir, nu) > 0 && cross(nu, rays[i + 1].dir) > 0)
            return i;
    raise(errc::outside_image, "ray lies outside every wedge");
}

bool strictly_inside(const Wedge& w, RayDir nu) { return cross(w.lo, nu) > 0 && cross(nu, w.hi) > 0; }

namespace {
double point_segment_distance(double px, double py, double ux, double uy, double vx, double vy) {
    const double dx = vx - ux, dy = vy - uy;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0.0 ? ((px - ux) * dx + (py - uy) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(px - (ux + t * dx), py - (uy + t * dy));
}
} // namespace

double containment_margin(const Polygon2& poly, double x, double y) {
    const std::size_t n = poly.vertices.size();
    std::vector<std::array<double, 2>> v;
    v.reserve(n);
    for (const RatPoint& p : poly.vertices)
        v.push_back({p.x.to_double(), p.y.to_double()});
    if (n == 0)
        return -std::numeric_limits<double>::infinity();
    if (n == 1)
        return -std::hypot(x - v[0][0], y - v[0][1]);
    if (n == 2)
        return -point_segment_distance(x, y, v[0][0], v[0][1], v[1][0], v[1][1]);
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& u = v[i];
        const auto& w = v[(i + 1) % n];
        const double ex = w[0] - u[0], ey = w[1] - u[1];
        margin = std::min(margin, (ex * (y - u[1]) - ey * (x - u[0])) / std::hypot(ex, ey));
    }
    return margin;
}

} // namespace conred
