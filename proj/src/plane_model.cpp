#include "trisub/plane_model.hpp"

#include <cmath>

#include "trisub/error.hpp"
#include "trisub/hyptrig.hpp"

namespace trisub::plane_model {

namespace {

struct Vec3 {
    double x0, x1, x2;
};

Vec3 sub(const HPoint& u, const HPoint& v) { return {u.x0 - v.x0, u.x1 - v.x1, u.x2 - v.x2}; }

double mink(const Vec3& u, const Vec3& v) { return u.x0 * v.x0 - u.x1 * v.x1 - u.x2 * v.x2; }

// Unit tangent at v pointing toward p, under the positive form -<.,.>.
Vec3 unit_tangent(const HPoint& v, const HPoint& p) {
    // p - <p,v> v, rewritten with <p,v> - 1 = -<p-v,p-v>/2.
    const Vec3 d = sub(p, v);
    const double half_sq = mink(d, d) / 2;
    Vec3 w{d.x0 + half_sq * v.x0, d.x1 + half_sq * v.x1, d.x2 + half_sq * v.x2};
    const double norm2 = -mink(w, w);
    if (!(norm2 > 0)) {
        throw DomainError("angle_at: coincident points");
    }
    const double n = std::sqrt(norm2);
    return {w.x0 / n, w.x1 / n, w.x2 / n};
}

double tangent_norm(const Vec3& w) {
    const double n2 = -mink(w, w);
    return std::sqrt(n2 > 0 ? n2 : 0.0);
}

// Unit spacelike normal of the plane through the origin, u and v.
Vec3 geodesic_normal(const HPoint& u, const HPoint& v) {
    const double c0 = u.x1 * v.x2 - u.x2 * v.x1;
    const double c1 = u.x2 * v.x0 - u.x0 * v.x2;
    const double c2 = u.x0 * v.x1 - u.x1 * v.x0;
    Vec3 n{c0, -c1, -c2};
    const double n2 = -mink(n, n);
    if (!(n2 > 0)) {
        throw DomainError("geodesic through coincident points");
    }
    const double s = std::sqrt(n2);
    return {n.x0 / s, n.x1 / s, n.x2 / s};
}

}  // namespace

double minkowski(const HPoint& u, const HPoint& v) { return u.x0 * v.x0 - u.x1 * v.x1 - u.x2 * v.x2; }

HPoint normalized(const HPoint& u) { return HPoint{std::sqrt(1 + u.x1 * u.x1 + u.x2 * u.x2), u.x1, u.x2}; }

PlacedTriangle place(const EdgeLengths& e) {
    const AngleShape ang = hyptrig::angles_from_edges(e);
    PlacedTriangle t;
    t.p_a = HPoint{1.0, 0.0, 0.0};
    t.p_b = normalized(HPoint{0.0, std::sinh(e.c), 0.0});
    t.p_c = normalized(HPoint{0.0, std::sinh(e.b) * std::cos(ang.A), std::sinh(e.b) * std::sin(ang.A)});
    return t;
}

double dist(const HPoint& u, const HPoint& v) {
    const double d = minkowski(u, v);
    if (!(d >= 1 - 1e-12)) {
        throw DomainError("dist: Minkowski product below 1, not points of the hyperboloid");
    }
    if (d > 2) {
        return std::acosh(d);
    }
    const double d0 = u.x0 - v.x0;
    const double d1 = u.x1 - v.x1;
    const double d2 = u.x2 - v.x2;
    const double chord2 = (d1 * d1 + d2 * d2) - d0 * d0;
    return 2 * std::asinh(std::sqrt(chord2 > 0 ? chord2 : 0.0) / 2);
}

HPoint midpoint(const HPoint& u, const HPoint& v) {
    const double s = std::sqrt(2 + 2 * minkowski(u, v));
    return normalized(HPoint{(u.x0 + v.x0) / s, (u.x1 + v.x1) / s, (u.x2 + v.x2) / s});
}

double angle_at(const HPoint& v, const HPoint& p, const HPoint& q) {
    const Vec3 ep = unit_tangent(v, p);
    const Vec3 eq = unit_tangent(v, q);
    const Vec3 diff{ep.x0 - eq.x0, ep.x1 - eq.x1, ep.x2 - eq.x2};
    const Vec3 sum{ep.x0 + eq.x0, ep.x1 + eq.x1, ep.x2 + eq.x2};
    return 2 * std::atan2(tangent_norm(diff), tangent_norm(sum));
}

double distance_to_geodesic(const HPoint& p, const HPoint& u, const HPoint& v) {
    const Vec3 n = geodesic_normal(u, v);
    return std::asinh(std::abs(p.x0 * n.x0 - p.x1 * n.x1 - p.x2 * n.x2));
}

HPoint foot_on_geodesic(const HPoint& p, const HPoint& u, const HPoint& v) {
    const Vec3 n = geodesic_normal(u, v);
    const double pn = p.x0 * n.x0 - p.x1 * n.x1 - p.x2 * n.x2;
    const double k = std::sqrt(1 + pn * pn);
    return normalized(HPoint{(p.x0 + pn * n.x0) / k, (p.x1 + pn * n.x1) / k, (p.x2 + pn * n.x2) / k});
}

HPoint geodesic_point(const HPoint& u, const HPoint& v, double t) {
    const double d = dist(u, v);
    if (d == 0) {
        return u;
    }
    const double wu = std::sinh((1 - t) * d) / std::sinh(d);
    const double wv = std::sinh(t * d) / std::sinh(d);
    return normalized(HPoint{wu * u.x0 + wv * v.x0, wu * u.x1 + wv * v.x1, wu * u.x2 + wv * v.x2});
}

DiskPoint to_disk(const HPoint& u, DiskModel model) {
    if (model == DiskModel::klein) {
        return {u.x1 / u.x0, u.x2 / u.x0};
    }
    return {u.x1 / (1 + u.x0), u.x2 / (1 + u.x0)};
}

EdgeLengths measure(const PlacedTriangle& t) {
    return EdgeLengths{dist(t.p_b, t.p_c), dist(t.p_c, t.p_a), dist(t.p_a, t.p_b)};
}

}  // namespace trisub::plane_model
