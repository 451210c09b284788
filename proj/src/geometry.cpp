#include "capnet/geometry.h"

#include <stdexcept>

namespace capnet {

Rigid2 Rigid2::from_segments(Vec2 src0, Vec2 src1, Vec2 dst0, Vec2 dst1) {
    Vec2 ds = src1 - src0;
    Vec2 dd = dst1 - dst0;
    if (norm(ds) == 0.0 || norm(dd) == 0.0) {
        throw std::invalid_argument("Rigid2::from_segments: degenerate segment");
    }
    Rigid2 r(signed_angle(ds, dd), {});
    r.t_ = dst0 - r.apply_direction(src0);
    return r;
}

double signed_area(std::span<const Vec2> poly) {
    double a = 0.0;
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
        a += cross(poly[i], poly[(i + 1) % n]);
    }
    return 0.5 * a;
}

Vec3 newell_normal(std::span<const Vec3> poly) {
    Vec3 n{};
    for (std::size_t i = 0, k = poly.size(); i < k; ++i) {
        const Vec3& p = poly[i];
        const Vec3& q = poly[(i + 1) % k];
        n.x += (p.y - q.y) * (p.z + q.z);
        n.y += (p.z - q.z) * (p.x + q.x);
        n.z += (p.x - q.x) * (p.y + q.y);
    }
    return n;
}

double polygon_area(std::span<const Vec3> poly) { return 0.5 * norm(newell_normal(poly)); }

std::vector<Vec2> flatten_polygon(std::span<const Vec3> poly, Vec3 outward, std::size_t i) {
    const std::size_t n = poly.size();
    if (n < 3 || i >= n) throw std::invalid_argument("flatten_polygon: bad polygon");
    Vec3 origin = poly[i];
    Vec3 e1 = poly[(i + 1) % n] - origin;
    double len = norm(e1);
    double nlen = norm(outward);
    if (len == 0.0 || nlen == 0.0) throw std::invalid_argument("flatten_polygon: degenerate edge");
    e1 = (1.0 / len) * e1;
    Vec3 nrm = (1.0 / nlen) * outward;
    Vec3 e2 = cross(nrm, e1);
    std::vector<Vec2> out;
    out.reserve(n);
    for (const Vec3& p : poly) {
        Vec3 d = p - origin;
        out.push_back({dot(d, e1), dot(d, e2)});
    }
    return out;
}

}  // namespace capnet
