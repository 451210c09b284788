#pragma once

#include "capnet/geometry.h"

#include <limits>

namespace capnet {

struct Segment {
    Vec2 a;
    Vec2 b;
};

struct Ray {
    Vec2 origin;
    Vec2 direction;  // unit length
};

/// origin + t * dir for t in [0, tmax]; tmax is infinite for rays.
struct LinearPiece {
    Vec2 origin;
    Vec2 dir;
    double tmax = 1.0;

    static LinearPiece of(const Segment& s) { return {s.a, s.b - s.a, 1.0}; }
    static LinearPiece of(const Ray& r) {
        return {r.origin, r.direction, std::numeric_limits<double>::infinity()};
    }
    Vec2 at(double t) const { return origin + t * dir; }
    bool bounded() const { return tmax < std::numeric_limits<double>::infinity(); }
};

struct Intersection {
    enum class Kind { None, Point, Overlap };
    Kind kind = Kind::None;
    Vec2 first;   // the point, or one end of the shared piece
    Vec2 second;  // other end of the shared piece (Overlap only)

    explicit operator bool() const { return kind != Kind::None; }
};

/// Classify how two segments meet.  Pieces closer than eps are treated as
/// touching; a collinear overlap longer than eps is returned as the shared
/// segment.  Throws std::invalid_argument for a zero-length segment.
Intersection segments_intersect(const Segment& s1, const Segment& s2, double eps);
Intersection segments_intersect(const Segment& s1, const Segment& s2);

/// Same classification for any mix of segments and rays.
Intersection intersect(const LinearPiece& p1, const LinearPiece& p2, double eps);

double point_piece_distance(Vec2 p, const LinearPiece& piece);

/// Minimum distance between two pieces (0 when they intersect).
double piece_distance(const LinearPiece& p1, const LinearPiece& p2);

}  // namespace capnet
