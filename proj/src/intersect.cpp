#include "capnet/intersect.h"

#include "capnet/tolerance.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace capnet {

double point_piece_distance(Vec2 p, const LinearPiece& piece) {
    double len2 = dot(piece.dir, piece.dir);
    double t = dot(p - piece.origin, piece.dir) / len2;
    t = std::clamp(t, 0.0, piece.tmax);
    return distance(piece.at(t), p);
}

namespace {

Intersection collinear_overlap(const LinearPiece& p1, const LinearPiece& p2, double eps) {
    // Work in arc length along p1.
    double len1 = norm(p1.dir);
    Vec2 u = (1.0 / len1) * p1.dir;
    double lo1 = 0.0;
    double hi1 = p1.bounded() ? len1 * p1.tmax : std::numeric_limits<double>::infinity();
    double start = dot(p2.origin - p1.origin, u);
    double rate = dot(p2.dir, u);
    double lo2, hi2;
    if (p2.bounded()) {
        double end = start + rate * p2.tmax;
        lo2 = std::min(start, end);
        hi2 = std::max(start, end);
    } else if (rate > 0) {
        lo2 = start;
        hi2 = std::numeric_limits<double>::infinity();
    } else {
        lo2 = -std::numeric_limits<double>::infinity();
        hi2 = start;
    }
    double lo = std::max(lo1, lo2);
    double hi = std::min(hi1, hi2);
    if (lo > hi + eps) return {};
    if (hi - lo <= eps) {
        double m = std::isfinite(hi) ? 0.5 * (lo + hi) : lo;
        Vec2 pt = p1.origin + m * u;
        return {Intersection::Kind::Point, pt, pt};
    }
    // Two unbounded opposite rays never produce an infinite overlap here: one of
    // lo/hi is finite for every admissible pair.
    double far = std::isfinite(hi) ? hi : lo + 1.0;
    return {Intersection::Kind::Overlap, p1.origin + lo * u, p1.origin + far * u};
}

}  // namespace

Intersection intersect(const LinearPiece& p1, const LinearPiece& p2, double eps) {
    double n1 = norm(p1.dir), n2 = norm(p2.dir);
    if (n1 == 0.0 || n2 == 0.0) throw std::invalid_argument("intersect: zero-length segment");
    Vec2 r = p1.dir, s = p2.dir;
    Vec2 qp = p2.origin - p1.origin;
    double denom = cross(r, s);
    double sin_angle = denom / (n1 * n2);

    if (std::abs(sin_angle) < 1e-12) {
        double offset = std::abs(cross(qp, r)) / n1;
        if (offset > eps) return {};
        return collinear_overlap(p1, p2, eps);
    }

    double t = cross(qp, s) / denom;
    double w = cross(qp, r) / denom;
    double et = eps / n1, ew = eps / n2;
    if (t >= -et && t <= p1.tmax + et && w >= -ew && w <= p2.tmax + ew) {
        // Nearly parallel pieces may satisfy the line test far from either
        // piece; guard with the actual distance.
        Vec2 pt = p1.at(std::clamp(t, 0.0, p1.tmax));
        if (point_piece_distance(pt, p2) <= eps) {
            return {Intersection::Kind::Point, pt, pt};
        }
    }

    // Near-touches where an endpoint sits within eps of the other piece.
    auto touch = [&](Vec2 p, const LinearPiece& other) -> bool {
        return point_piece_distance(p, other) <= eps;
    };
    if (touch(p1.origin, p2)) return {Intersection::Kind::Point, p1.origin, p1.origin};
    if (p1.bounded() && touch(p1.at(p1.tmax), p2)) {
        Vec2 e = p1.at(p1.tmax);
        return {Intersection::Kind::Point, e, e};
    }
    if (touch(p2.origin, p1)) return {Intersection::Kind::Point, p2.origin, p2.origin};
    if (p2.bounded() && touch(p2.at(p2.tmax), p1)) {
        Vec2 e = p2.at(p2.tmax);
        return {Intersection::Kind::Point, e, e};
    }
    return {};
}

Intersection segments_intersect(const Segment& s1, const Segment& s2, double eps) {
    return intersect(LinearPiece::of(s1), LinearPiece::of(s2), eps);
}

Intersection segments_intersect(const Segment& s1, const Segment& s2) {
    return segments_intersect(s1, s2, default_tolerance());
}

double piece_distance(const LinearPiece& p1, const LinearPiece& p2) {
    if (intersect(p1, p2, 0.0)) return 0.0;
    double d = point_piece_distance(p1.origin, p2);
    d = std::min(d, point_piece_distance(p2.origin, p1));
    if (p1.bounded()) d = std::min(d, point_piece_distance(p1.at(p1.tmax), p2));
    if (p2.bounded()) d = std::min(d, point_piece_distance(p2.at(p2.tmax), p1));
    return d;
}

}  // namespace capnet
